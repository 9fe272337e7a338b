"""Discrete example constructions: nerves, partial monoids and
categories, twisted arrow categories, outer face complexes and the free
simplicial set an outer face complex generates.

Every builder validates its input (raising StructuralError on bad
tables) and emits a TruncatedSSet whose cell identifiers stay readable:
chains are arrow names joined with "|", words of a partial monoid are
"(x,y)", free cells are "(element;part,part)".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Callable, Mapping

from .sset import SimplicialMap, StructuralError, TruncatedSSet


@dataclass(frozen=True)
class FiniteCategory:
    """A finite category given by explicit tables.

    morphisms are (name, source, target) triples; identities assigns
    each object its identity morphism; composition maps (f, g) with
    target(f) = source(g) to the composite "f then g".
    """

    objects: tuple[str, ...]
    morphisms: tuple[tuple[str, str, str], ...]
    identities: Mapping[str, str]
    composition: Mapping[tuple[str, str], str]

    def source(self, f: str) -> str:
        return self._by_name[f][1]

    def target(self, f: str) -> str:
        return self._by_name[f][2]

    def compose(self, f: str, g: str) -> str:
        """The composite of f followed by g."""
        return self.composition[(f, g)]

    @property
    def _by_name(self) -> dict[str, tuple[str, str, str]]:
        return {name: m for m in self.morphisms for name in [m[0]]}


@dataclass(frozen=True)
class PartialMonoid:
    """A set with unit and a partially defined associative product.

    Absent keys in product mean the multiplication is undefined there.
    """

    carrier: tuple[str, ...]
    unit: str
    product: Mapping[tuple[str, str], str]


@dataclass(frozen=True)
class PartialCategory:
    """A category whose composition is only partially defined.

    Identities must exist (so every endo-hom set is inhabited) and
    compose on both sides; composition of non-identities may be absent.
    """

    objects: tuple[str, ...]
    morphisms: tuple[tuple[str, str, str], ...]
    identities: Mapping[str, str]
    composition: Mapping[tuple[str, str], str]


@dataclass(frozen=True)
class OuterFaceComplex:
    """A graded set with commuting bottom and top face maps only.

    grades[m] lists the degree-m elements for 0 <= m <= bound; d_bot[m]
    and d_top[m] are total maps grades[m] -> grades[m-1] for m >= 1.
    """

    bound: int
    grades: tuple[tuple[str, ...], ...]
    d_bot: Mapping[int, Mapping[str, str]]
    d_top: Mapping[int, Mapping[str, str]]


@dataclass(frozen=True)
class DirectedGraph:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]


def validate_category(C: FiniteCategory) -> None:
    _validate_arrow_data(C.objects, C.morphisms, C.identities)
    by_name = {m[0]: m for m in C.morphisms}
    for f_name, f_src, f_tgt in C.morphisms:
        for g_name, g_src, g_tgt in C.morphisms:
            if f_tgt != g_src:
                if (f_name, g_name) in C.composition:
                    raise StructuralError(
                        f"composite defined on non-composable pair ({f_name}, {g_name})"
                    )
                continue
            if (f_name, g_name) not in C.composition:
                raise StructuralError(
                    f"missing composite for composable pair ({f_name}, {g_name})"
                )
            h = C.composition[(f_name, g_name)]
            if h not in by_name:
                raise StructuralError(f"composite {h!r} is not a morphism")
            if by_name[h][1] != f_src or by_name[h][2] != g_tgt:
                raise StructuralError(f"composite {h!r} has wrong endpoints")
    for f_name, f_src, f_tgt in C.morphisms:
        if C.composition[(C.identities[f_src], f_name)] != f_name:
            raise StructuralError(f"left unit law fails for {f_name!r}")
        if C.composition[(f_name, C.identities[f_tgt])] != f_name:
            raise StructuralError(f"right unit law fails for {f_name!r}")
    for f in C.morphisms:
        for g in C.morphisms:
            if f[2] != g[1]:
                continue
            for h in C.morphisms:
                if g[2] != h[1]:
                    continue
                left = C.composition[(C.composition[(f[0], g[0])], h[0])]
                right = C.composition[(f[0], C.composition[(g[0], h[0])])]
                if left != right:
                    raise StructuralError(
                        f"associativity fails on ({f[0]}, {g[0]}, {h[0]})"
                    )


def _validate_arrow_data(objects, morphisms, identities) -> None:
    if len(set(objects)) != len(objects):
        raise StructuralError("duplicate object names")
    names = [m[0] for m in morphisms]
    if len(set(names)) != len(names):
        raise StructuralError("duplicate morphism names")
    objset = set(objects)
    for name, src, tgt in morphisms:
        if src not in objset or tgt not in objset:
            raise StructuralError(f"morphism {name!r} has dangling endpoints")
    by_name = {m[0]: m for m in morphisms}
    for x in objects:
        if x not in identities:
            raise StructuralError(f"object {x!r} has no identity (endo-hom empty)")
        ident = identities[x]
        if ident not in by_name:
            raise StructuralError(f"identity {ident!r} of {x!r} is not a morphism")
        if by_name[ident][1] != x or by_name[ident][2] != x:
            raise StructuralError(f"identity {ident!r} is not an endomorphism of {x!r}")


def validate_partial_monoid(M: PartialMonoid, max_size: int = 32) -> None:
    if len(M.carrier) > max_size:
        raise StructuralError(
            f"carrier size {len(M.carrier)} exceeds the exhaustive-check cap {max_size}"
        )
    if len(set(M.carrier)) != len(M.carrier):
        raise StructuralError("duplicate carrier elements")
    carrier = set(M.carrier)
    if M.unit not in carrier:
        raise StructuralError(f"unit {M.unit!r} is not a carrier element")
    for (x, y), z in M.product.items():
        if x not in carrier or y not in carrier or z not in carrier:
            raise StructuralError(f"product entry ({x!r}, {y!r}) -> {z!r} dangles")
    for x in M.carrier:
        if M.product.get((M.unit, x)) != x or M.product.get((x, M.unit)) != x:
            raise StructuralError(f"unit laws fail on {x!r}")
    for x in M.carrier:
        for y in M.carrier:
            for z in M.carrier:
                xy = M.product.get((x, y))
                yz = M.product.get((y, z))
                left = M.product.get((xy, z)) if xy is not None else None
                right = M.product.get((x, yz)) if yz is not None else None
                if (left is None) != (right is None) or left != right:
                    raise StructuralError(
                        f"partial associativity fails on ({x!r}, {y!r}, {z!r})"
                    )


def validate_partial_category(C: PartialCategory) -> None:
    _validate_arrow_data(C.objects, C.morphisms, C.identities)
    by_name = {m[0]: m for m in C.morphisms}
    for (f, g), h in C.composition.items():
        if f not in by_name or g not in by_name or h not in by_name:
            raise StructuralError(f"composition entry ({f!r}, {g!r}) -> {h!r} dangles")
        if by_name[f][2] != by_name[g][1]:
            raise StructuralError(
                f"composite defined on non-composable pair ({f!r}, {g!r})"
            )
        if by_name[h][1] != by_name[f][1] or by_name[h][2] != by_name[g][2]:
            raise StructuralError(f"composite {h!r} has wrong endpoints")
    for name, src, tgt in C.morphisms:
        if C.composition.get((C.identities[src], name)) != name:
            raise StructuralError(f"left unit law fails for {name!r}")
        if C.composition.get((name, C.identities[tgt])) != name:
            raise StructuralError(f"right unit law fails for {name!r}")
    for f in C.morphisms:
        for g in C.morphisms:
            if f[2] != g[1]:
                continue
            for h in C.morphisms:
                if g[2] != h[1]:
                    continue
                fg = C.composition.get((f[0], g[0]))
                gh = C.composition.get((g[0], h[0]))
                left = C.composition.get((fg, h[0])) if fg is not None else None
                right = C.composition.get((f[0], gh)) if gh is not None else None
                if (left is None) != (right is None) or left != right:
                    raise StructuralError(
                        f"partial associativity fails on ({f[0]}, {g[0]}, {h[0]})"
                    )


def validate_ofc(A: OuterFaceComplex) -> None:
    if A.bound < 0 or len(A.grades) != A.bound + 1:
        raise StructuralError("grades must cover 0..bound")
    for m, grade in enumerate(A.grades):
        if len(set(grade)) != len(grade):
            raise StructuralError(f"duplicate elements in grade {m}")
    for m in range(1, A.bound + 1):
        for kind, tables in (("d_bot", A.d_bot), ("d_top", A.d_top)):
            if m not in tables:
                raise StructuralError(f"missing {kind} table at degree {m}")
            lower = set(A.grades[m - 1])
            for a in A.grades[m]:
                if a not in tables[m]:
                    raise StructuralError(f"{kind} at degree {m} undefined on {a!r}")
                if tables[m][a] not in lower:
                    raise StructuralError(
                        f"{kind} at degree {m} sends {a!r} to dangling "
                        f"{tables[m][a]!r}"
                    )
    for m in range(2, A.bound + 1):
        for a in A.grades[m]:
            if A.d_top[m - 1][A.d_bot[m][a]] != A.d_bot[m - 1][A.d_top[m][a]]:
                raise StructuralError(
                    f"d_top d_bot != d_bot d_top at degree {m} on {a!r}"
                )


def validate_graph(G: DirectedGraph) -> None:
    if len(set(G.vertices)) != len(G.vertices):
        raise StructuralError("duplicate vertex names")
    names = [e[0] for e in G.edges]
    if len(set(names)) != len(names):
        raise StructuralError("duplicate edge names")
    vs = set(G.vertices)
    for name, src, tgt in G.edges:
        if src not in vs or tgt not in vs:
            raise StructuralError(f"edge {name!r} has dangling endpoints")


def _chain_id(chain: tuple[str, ...]) -> str:
    return "|".join(chain)


def _chain_sset(
    objects: tuple[str, ...],
    morphisms: tuple[tuple[str, str, str], ...],
    identities: Mapping[str, str],
    compose: Callable[[str, str], str | None],
    level: int,
) -> TruncatedSSet:
    """Composable chains with a possibly partial composition.

    A chain extends only while its fold composite is defined, so inner
    faces always compose.
    """
    by_name = {m[0]: m for m in morphisms}
    chains: list[list[tuple[str, ...]]] = [[(x,) for x in objects]]
    fold: dict[tuple[str, ...], str | None] = {}
    if level >= 1:
        chains.append([(m[0],) for m in morphisms])
        fold.update({(m[0],): m[0] for m in morphisms})
    for n in range(2, level + 1):
        nxt = []
        for ch in chains[n - 1]:
            for name, src, tgt in morphisms:
                if by_name[ch[-1]][2] != src:
                    continue
                value = compose(fold[ch], name)
                if value is None:
                    continue
                ext = ch + (name,)
                fold[ext] = value
                nxt.append(ext)
        chains.append(nxt)

    def vertex(chain: tuple[str, ...], i: int) -> str:
        return by_name[chain[0]][1] if i == 0 else by_name[chain[i - 1]][2]

    cells = tuple(
        tuple(c[0] for c in chains[0]) if n == 0 else
        tuple(_chain_id(ch) for ch in chains[n])
        for n in range(level + 1)
    )
    faces: dict[tuple[int, int], dict[str, str]] = {}
    degeneracies: dict[tuple[int, int], dict[str, str]] = {}
    for n in range(1, level + 1):
        for i in range(n + 1):
            table = {}
            for ch in chains[n]:
                if n == 1:
                    table[_chain_id(ch)] = vertex(ch, 1 - i)
                elif i == 0:
                    table[_chain_id(ch)] = _chain_id(ch[1:])
                elif i == n:
                    table[_chain_id(ch)] = _chain_id(ch[:-1])
                else:
                    comp = compose(ch[i - 1], ch[i])
                    if comp is None:
                        raise StructuralError(
                            f"inner face undefined on chain {ch!r}; the "
                            "composition tables are not associative enough"
                        )
                    table[_chain_id(ch)] = _chain_id(ch[: i - 1] + (comp,) + ch[i + 1 :])
            faces[(n, i)] = table
    for n in range(level):
        for i in range(n + 1):
            table = {}
            if n == 0:
                for (x,) in chains[0]:
                    table[x] = identities[x]
            else:
                for ch in chains[n]:
                    ident = identities[vertex(ch, i)]
                    table[_chain_id(ch)] = _chain_id(ch[:i] + (ident,) + ch[i:])
            degeneracies[(n, i)] = table
    return TruncatedSSet(level, cells, faces, degeneracies)


def nerve(C: FiniteCategory, level: int) -> TruncatedSSet:
    """Composable chains of morphisms; inner faces compose, outer faces
    drop an end, degeneracies insert identities."""
    validate_category(C)
    return _chain_sset(
        C.objects, C.morphisms, C.identities, lambda f, g: C.composition[(f, g)], level
    )


def from_partial_category(C: PartialCategory, level: int) -> TruncatedSSet:
    """Chains that are composable and whose composite is defined."""
    validate_partial_category(C)
    return _chain_sset(
        C.objects,
        C.morphisms,
        C.identities,
        lambda f, g: C.composition.get((f, g)),
        level,
    )


def twisted_arrow(C: FiniteCategory) -> FiniteCategory:
    """Objects are the morphisms of C; an arrow f -> g is a two-sided
    factorization g = k o f o h, composed by stacking factorizations."""
    validate_category(C)
    by_name = {m[0]: m for m in C.morphisms}

    def tw_name(f: str, h: str, k: str) -> str:
        return f"[{h}|{f}|{k}]"

    objects = tuple(m[0] for m in C.morphisms)
    morphisms = []
    factorization = {}
    for f, f_src, f_tgt in C.morphisms:
        for h, h_src, h_tgt in C.morphisms:
            if h_tgt != f_src:
                continue
            for k, k_src, k_tgt in C.morphisms:
                if k_src != f_tgt:
                    continue
                g = C.composition[(C.composition[(h, f)], k)]
                name = tw_name(f, h, k)
                morphisms.append((name, f, g))
                factorization[name] = (f, h, k)
    identities = {
        f: tw_name(f, C.identities[src], C.identities[tgt])
        for f, src, tgt in C.morphisms
    }
    composition = {}
    for name1, f, g in morphisms:
        _, h1, k1 = factorization[name1]
        for name2, g2, e in morphisms:
            if g2 != g:
                continue
            _, h2, k2 = factorization[name2]
            composition[(name1, name2)] = tw_name(
                f, C.composition[(h2, h1)], C.composition[(k1, k2)]
            )
    return FiniteCategory(objects, tuple(morphisms), identities, composition)


def _word_id(word: tuple[str, ...]) -> str:
    return "(" + ",".join(word) + ")"


def from_partial_monoid(M: PartialMonoid, level: int) -> TruncatedSSet:
    """Words whose product is defined; inner faces multiply adjacent
    entries, outer faces drop an end, degeneracies insert the unit."""
    validate_partial_monoid(M)
    words: list[list[tuple[str, ...]]] = [[()]]
    fold: dict[tuple[str, ...], str] = {(): M.unit}
    for n in range(1, level + 1):
        nxt = []
        for w in words[n - 1]:
            for x in M.carrier:
                value = M.product.get((fold[w], x))
                if value is None:
                    continue
                ext = w + (x,)
                fold[ext] = value
                nxt.append(ext)
        words.append(nxt)
    cells = tuple(tuple(_word_id(w) for w in words[n]) for n in range(level + 1))
    faces: dict[tuple[int, int], dict[str, str]] = {}
    degeneracies: dict[tuple[int, int], dict[str, str]] = {}
    for n in range(1, level + 1):
        for i in range(n + 1):
            table = {}
            for w in words[n]:
                if i == 0:
                    out = w[1:]
                elif i == n:
                    out = w[:-1]
                else:
                    prod = M.product.get((w[i - 1], w[i]))
                    if prod is None:
                        raise StructuralError(
                            f"inner product undefined on word {w!r}"
                        )
                    out = w[: i - 1] + (prod,) + w[i + 1 :]
                table[_word_id(w)] = _word_id(out)
            faces[(n, i)] = table
    for n in range(level):
        for i in range(n + 1):
            degeneracies[(n, i)] = {
                _word_id(w): _word_id(w[:i] + (M.unit,) + w[i:]) for w in words[n]
            }
    return TruncatedSSet(level, cells, faces, degeneracies)


def bounded_words(alphabet: tuple[str, ...], max_len: int) -> OuterFaceComplex:
    """Words of length at most max_len; the face maps discard the first
    or last letter."""
    grades = []
    for m in range(max_len + 1):
        grade = tuple("".join(w) for w in iproduct(alphabet, repeat=m))
        if len(set(grade)) != len(grade):
            raise StructuralError("alphabet letters produce colliding words")
        grades.append(grade)
    d_bot = {
        m: {w: w[1:] for w in grades[m]} for m in range(1, max_len + 1)
    }
    d_top = {
        m: {w: w[:-1] for w in grades[m]} for m in range(1, max_len + 1)
    }
    return OuterFaceComplex(max_len, tuple(grades), d_bot, d_top)


def graph_paths(G: DirectedGraph, bound: int) -> OuterFaceComplex:
    """Edge paths of length at most bound; degree 0 is the vertex set,
    and on edges the face maps take target (bottom) and source (top)."""
    validate_graph(G)
    by_name = {e[0]: e for e in G.edges}
    paths: list[list[tuple[str, ...]]] = [[]]
    paths[0] = [(v,) for v in G.vertices]
    if bound >= 1:
        paths.append([(e[0],) for e in G.edges])
    for m in range(2, bound + 1):
        nxt = []
        for p in paths[m - 1]:
            for name, src, tgt in G.edges:
                if by_name[p[-1]][2] == src:
                    nxt.append(p + (name,))
        paths.append(nxt)

    def path_id(p: tuple[str, ...], m: int) -> str:
        return p[0] if m == 0 else "".join(p)

    grades = []
    for m in range(bound + 1):
        grade = tuple(path_id(p, m) for p in paths[m])
        if len(set(grade)) != len(grade):
            raise StructuralError("edge names produce colliding path labels")
        grades.append(grade)
    d_bot: dict[int, dict[str, str]] = {}
    d_top: dict[int, dict[str, str]] = {}
    for m in range(1, bound + 1):
        bot, top = {}, {}
        for p in paths[m]:
            if m == 1:
                bot[path_id(p, m)] = by_name[p[0]][2]
                top[path_id(p, m)] = by_name[p[0]][1]
            else:
                bot[path_id(p, m)] = path_id(p[1:], m - 1)
                top[path_id(p, m)] = path_id(p[:-1], m - 1)
        d_bot[m], d_top[m] = bot, top
    return OuterFaceComplex(bound, tuple(grades), d_bot, d_top)


def terminal_complex(bound: int) -> OuterFaceComplex:
    """One element per degree; the free construction turns it into the
    nerve of addition of naturals up to the bound."""
    grades = tuple(("*",) for _ in range(bound + 1))
    tables = {m: {"*": "*"} for m in range(1, bound + 1)}
    return OuterFaceComplex(bound, grades, tables, dict(tables))


def _compositions(k: int, bound: int):
    """Weak compositions (l_1, ..., l_k) with sum <= bound, lexicographic."""
    if k == 0:
        yield ()
        return
    for first in range(bound + 1):
        for rest in _compositions(k - 1, bound - first):
            yield (first,) + rest


def _free_cell_id(a: str, parts: tuple[int, ...]) -> str:
    return f"({a};{','.join(str(p) for p in parts)})"


def _iter_free_cells(A: OuterFaceComplex, k: int):
    for parts in _compositions(k, A.bound):
        for a in A.grades[sum(parts)]:
            yield a, parts


def free_decomposition(A: OuterFaceComplex, level: int) -> TruncatedSSet:
    """The simplicial set freely generated by an outer face complex.

    Level-k cells are pairs (a; l_1,...,l_k) with a of degree sum(l_i).
    Inner faces add adjacent parts; the outer faces drop an outer part
    after applying that many bottom (resp. top) face maps to a;
    degeneracies insert a zero part.
    """
    validate_ofc(A)
    cells = tuple(
        tuple(_free_cell_id(a, parts) for a, parts in _iter_free_cells(A, k))
        for k in range(level + 1)
    )

    def iter_bot(a: str, m: int, times: int) -> str:
        for step in range(times):
            a = A.d_bot[m - step][a]
        return a

    def iter_top(a: str, m: int, times: int) -> str:
        for step in range(times):
            a = A.d_top[m - step][a]
        return a

    faces: dict[tuple[int, int], dict[str, str]] = {}
    degeneracies: dict[tuple[int, int], dict[str, str]] = {}
    for k in range(1, level + 1):
        for i in range(k + 1):
            table = {}
            for a, parts in _iter_free_cells(A, k):
                m = sum(parts)
                if i == 0:
                    out = _free_cell_id(iter_bot(a, m, parts[0]), parts[1:])
                elif i == k:
                    out = _free_cell_id(iter_top(a, m, parts[-1]), parts[:-1])
                else:
                    merged = parts[: i - 1] + (parts[i - 1] + parts[i],) + parts[i + 1 :]
                    out = _free_cell_id(a, merged)
                table[_free_cell_id(a, parts)] = out
            faces[(k, i)] = table
    for k in range(level):
        for i in range(k + 1):
            degeneracies[(k, i)] = {
                _free_cell_id(a, parts): _free_cell_id(
                    a, parts[:i] + (0,) + parts[i:]
                )
                for a, parts in _iter_free_cells(A, k)
            }
    return TruncatedSSet(level, cells, faces, degeneracies)


def length_map(A: OuterFaceComplex, level: int) -> SimplicialMap:
    """Forget the graded element, keeping the list of part sizes: a
    simplicial map onto the free simplicial set of the one-point complex."""
    X = free_decomposition(A, level)
    T = free_decomposition(terminal_complex(A.bound), level)
    components = tuple(
        {
            _free_cell_id(a, parts): _free_cell_id("*", parts)
            for a, parts in _iter_free_cells(A, k)
        }
        for k in range(level + 1)
    )
    return SimplicialMap(X, T, components)
