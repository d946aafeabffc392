"""
Summary
-------
Decorated trees of genus-zero torus-fixed stable maps to Sym^d P^r:
validation of the decoration conditions, combinable edge pairs, edge
combining, minimal forms, canonical forms for comparison, and
fixture generators for chains built from one-edge moves.
"""
from fractions import Fraction
from itertools import chain, combinations

from .base import SymconeError
from .combinat import Multipartition, OrderedZeroPartition, Partition, ShapeMismatch
from .sectors import EdgeClass, enumerate_edges, enumerate_sectors

CONDITIONS = ("tree", "shape", "cond1", "cond2", "cond3", "cond4", "cond5", "degree")


class BadEdge(SymconeError):
    """An edge name that does not belong to the tree."""


class NotCombinable(SymconeError):
    """A pair of edges that does not satisfy the combinability conditions."""


class Invalid(SymconeError):
    """A tree that fails validation was passed where a valid tree is required."""


class DecoratedTree(object):
    """An n-marked genus-zero Sym^d P^r-decorated tree.

    Two trees compare equal when their canonical forms agree; vertex and
    edge names do not take part in the comparison, mark names do.

    Attributes
    ----------
    d : int
        Number of points.
    r : int
        Dimension of the projective space.
    veval : dict
        Vertex name mapped to ``combinat.OrderedZeroPartition``.
    edges : dict
        Edge name mapped to its pair of end vertices.
    q : dict
        Edge name mapped to its degree ratio, a positive ``fractions.Fraction``.
    flag_mon : dict
        Flag (vertex, edge) mapped to ``combinat.Multipartition``.
    marks : dict
        Mark name mapped to the vertex carrying it.
    mark_mon : dict
        Mark name mapped to ``combinat.Multipartition``.
    """
    def __init__(self, d, r, veval, edges, q, flag_mon, marks=None, mark_mon=None):
        self.d = d
        self.r = r
        self.veval = {v: OrderedZeroPartition(mu) for v, mu in veval.items()}
        self.edges = {e: tuple(ends) for e, ends in edges.items()}
        self.q = {e: Fraction(value) for e, value in q.items()}
        self.flag_mon = {flag: _multipartition(mon) for flag, mon in flag_mon.items()}
        self.marks = dict(marks or {})
        self.mark_mon = {b: _multipartition(mon) for b, mon in (mark_mon or {}).items()}

    @property
    def vertices(self):
        return sorted(self.veval)

    def edge_ends(self, e):
        if e not in self.edges:
            raise BadEdge(f"Edge {e!r} is not an edge of the tree.")
        return self.edges[e]

    def incident(self, v):
        return sorted(e for e, ends in self.edges.items() if v in ends)

    def valence(self, v):
        return len(self.incident(v))

    def marks_at(self, v):
        return sorted(b for b, w in self.marks.items() if w == v)

    def other_end(self, e, v):
        first, second = self.edge_ends(e)
        return second if v == first else first

    def flags(self):
        return sorted((v, e) for e, ends in self.edges.items() for v in ends)

    def moved_coordinates(self, e):
        v, w = self.edge_ends(e)
        return [k for k in range(self.r + 1) if self.veval[v][k] != self.veval[w][k]]

    def i_mov(self, v, e):
        """The coordinate where VEval(v) exceeds VEval at the other end of e."""
        w = self.other_end(e, v)
        moved = self.moved_coordinates(e)
        if len(moved) != 2:
            raise Invalid(f"Edge {e!r} changes {len(moved)} coordinates, not two.")
        return next(k for k in moved if self.veval[v][k] > self.veval[w][k])

    def mov(self, e):
        """Moving parts Mov(e)."""
        v, w = self.edge_ends(e)
        k = self.i_mov(v, e)
        return self.flag_mon[(v, e)][k].minus(self.flag_mon[(w, e)][k])

    def stat(self, e):
        """Stationary parts Stat(e), labeled by coordinate."""
        v, w = self.edge_ends(e)
        k = self.i_mov(v, e)
        return self.flag_mon[(v, e)].replace(k, self.flag_mon[(w, e)][k])

    def mon(self, e):
        """Mon(e), the partition of d shared by both flags of e."""
        v, _ = self.edge_ends(e)
        return self.flag_mon[(v, e)].underlying()

    def beta_parts(self, e):
        return [self.q[e] * eta for eta in self.mov(e)]

    def beta_edge(self, e):
        return sum(self.beta_parts(e), Fraction(0))

    def beta(self):
        return sum((self.beta_edge(e) for e in self.edges), Fraction(0))

    def vertex_class(self, v):
        """One of "V1", "V11", "V2" or "VS"."""
        valence = self.valence(v)
        n_marks = len(self.marks_at(v))
        if valence == 1 and n_marks == 0:
            return "V1"
        if valence == 1 and n_marks == 1:
            return "V11"
        if valence == 2 and n_marks == 0:
            return "V2"
        return "VS"

    def vertices_of_class(self, name):
        return [v for v in self.vertices if self.vertex_class(v) == name]

    def is_steady(self, v, e):
        """A flag is steady unless v is bare of valence 2 with a combinable edge pair."""
        if e not in self.incident(v):
            raise BadEdge(f"({v!r}, {e!r}) is not a flag of the tree.")
        if self.vertex_class(v) != "V2":
            return True
        first, second = self.incident(v)
        return not combinable(self, first, second)

    def copy(self):
        return DecoratedTree(self.d, self.r, self.veval, self.edges, self.q, self.flag_mon, self.marks, self.mark_mon)

    def __eq__(self, other):
        return isinstance(other, DecoratedTree) and canonical_form(self) == canonical_form(other)

    def __hash__(self):
        return hash(canonical_form(self))

    def __repr__(self):
        return f"DecoratedTree(d={self.d}, r={self.r}, vertices={len(self.veval)}, edges={sorted(self.edges)}, marks={sorted(self.marks)})"

    def to_json(self):
        return {"d": self.d, "r": self.r,
                "vertices": [{"id": v, "veval": list(self.veval[v])} for v in self.vertices],
                "edges": [{"id": e, "ends": list(ends), "q": str(self.q[e]),
                           "mon": [self.flag_mon[(v, e)].to_json() if (v, e) in self.flag_mon else None for v in ends]}
                          for e, ends in sorted(self.edges.items())],
                "marks": [{"id": b, "vertex": self.marks[b],
                           "mon": self.mark_mon[b].to_json() if b in self.mark_mon else None}
                          for b in sorted(self.marks)]}

    @classmethod
    def from_json(cls, obj):
        """Raises ``Invalid`` on missing or malformed keys."""
        try:
            veval = {vertex["id"]: vertex["veval"] for vertex in obj["vertices"]}
            edges, q, flag_mon = {}, {}, {}
            for edge in obj["edges"]:
                ends = tuple(edge["ends"])
                edges[edge["id"]] = ends
                q[edge["id"]] = Fraction(edge["q"])
                for v, mon in zip(ends, edge["mon"]):
                    if mon is not None:
                        flag_mon[(v, edge["id"])] = mon
            marks = {mark["id"]: mark["vertex"] for mark in obj.get("marks", [])}
            mark_mon = {mark["id"]: mark["mon"] for mark in obj.get("marks", []) if mark.get("mon") is not None}
            d = obj.get("d", sum(next(iter(veval.values()))) if veval else 0)
            r = obj.get("r", len(next(iter(veval.values()))) - 1 if veval else 0)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as error:
            raise Invalid(f"Malformed tree encoding: {error}.")
        return cls(d, r, veval, edges, q, flag_mon, marks, mark_mon)


def _multipartition(mon):
    return mon if isinstance(mon, Multipartition) else Multipartition(mon)


def _is_ones_multipartition(mon):
    return all(c.is_ones() for c in mon.components)


def _is_tree(t):
    vertices = set(t.veval)
    if not vertices:
        return False, "the tree has no vertices"
    for e, ends in t.edges.items():
        if len(ends) != 2 or ends[0] == ends[1] or not set(ends) <= vertices:
            return False, f"edge {e!r} does not join two distinct vertices"
    if len(t.edges) != len(vertices) - 1:
        return False, f"{len(t.edges)} edges on {len(vertices)} vertices"
    start = min(vertices)
    seen = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for e in t.incident(v):
            w = t.other_end(e, v)
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    if seen != vertices:
        return False, "the graph is not connected"
    return True, ""


def _shape_failures(t):
    failures = []
    for v, mu in t.veval.items():
        if len(mu) != t.r + 1 or mu.d != t.d:
            failures.append(f"VEval({v}) = {tuple(mu)} is not in ZPart({t.d}, {t.r + 1})")
    for e, ends in t.edges.items():
        if t.q.get(e, 0) <= 0:
            failures.append(f"q({e}) is not a positive rational")
        for v in ends:
            mon = t.flag_mon.get((v, e))
            if mon is None:
                failures.append(f"flag ({v}, {e}) has no monodromy")
            elif v in t.veval and not _fits(mon, t.veval[v]):
                failures.append(f"Mon({v}, {e}) = {mon} is not a multipartition of {tuple(t.veval[v])}")
    for b, v in t.marks.items():
        if v not in t.veval:
            failures.append(f"mark {b} sits on unknown vertex {v!r}")
            continue
        mon = t.mark_mon.get(b)
        if mon is None:
            failures.append(f"mark {b} has no monodromy")
        elif not _fits(mon, t.veval[v]):
            failures.append(f"Mon({b}) = {mon} is not a multipartition of {tuple(t.veval[v])}")
    return failures


def _fits(mon, mu):
    return len(mon) == len(mu) and all(c.total == m for c, m in zip(mon.components, mu))


class TreeVerdict(object):
    """Failure messages of ``trees.validate``, keyed by condition name."""
    def __init__(self, conditions):
        self.conditions = conditions
        self.passed = not any(conditions.values())

    def failed(self):
        return [name for name in CONDITIONS if self.conditions.get(name)]

    def __bool__(self):
        return self.passed

    def to_json(self):
        return {"verdict": "PASS" if self.passed else "FAIL",
                "conditions": {name: list(messages) for name, messages in self.conditions.items()}}


def validate(t):
    """Check tree-ness, shapes, conditions (1)-(5) and integral edge degrees."""
    conditions = {name: [] for name in CONDITIONS}
    is_tree, reason = _is_tree(t)
    if not is_tree:
        conditions["tree"].append(reason)
        return TreeVerdict(conditions)
    conditions["shape"] = _shape_failures(t)
    if conditions["shape"]:
        return TreeVerdict(conditions)
    for e in sorted(t.edges):
        v, w = t.edges[e]
        moved = t.moved_coordinates(e)
        if len(moved) != 2:
            conditions["cond1"].append(f"edge {e} changes coordinates {moved}")
            continue
        a, b = t.i_mov(v, e), t.i_mov(w, e)
        mon_v, mon_w = t.flag_mon[(v, e)], t.flag_mon[(w, e)]
        for k in range(t.r + 1):
            if k not in (a, b) and mon_v[k] != mon_w[k]:
                conditions["cond2"].append(f"edge {e}: coordinate {k} differs between its flags")
        if not (mon_v[a].contains(mon_w[a]) and mon_w[b].contains(mon_v[b])):
            conditions["cond2"].append(f"edge {e}: moving coordinates are not nested")
            continue
        leaving = mon_v[a].minus(mon_w[a])
        arriving = mon_w[b].minus(mon_v[b])
        if leaving != arriving:
            conditions["cond2"].append(f"edge {e}: {leaving} leaves but {arriving} arrives")
            continue
        if any((t.q[e] * eta).denominator != 1 for eta in leaving):
            conditions["degree"].append(f"edge {e}: q = {t.q[e]} gives a non-integral degree on {leaving}")
    for v in t.vertices:
        vertex_class = t.vertex_class(v)
        incident = t.incident(v)
        if vertex_class == "V1" and not _is_ones_multipartition(t.flag_mon[(v, incident[0])]):
            conditions["cond3"].append(f"bare leaf {v} has monodromy {t.flag_mon[(v, incident[0])]}")
        elif vertex_class == "V11":
            b = t.marks_at(v)[0]
            if t.flag_mon[(v, incident[0])] != t.mark_mon[b]:
                conditions["cond4"].append(f"marked leaf {v}: flag monodromy differs from Mon({b})")
        elif vertex_class == "V2":
            first, second = incident
            if t.flag_mon[(v, first)] != t.flag_mon[(v, second)]:
                conditions["cond5"].append(f"vertex {v}: flags of {first} and {second} disagree")
    return TreeVerdict(conditions)


def combinable(t, e1, e2):
    """True iff e1 and e2 meet at a bare valence-2 vertex, share q, and
    move parts between the same two coordinates in the same direction.
    """
    ends1, ends2 = t.edge_ends(e1), t.edge_ends(e2)
    if e1 == e2:
        return False
    shared = set(ends1) & set(ends2)
    if len(shared) != 1:
        return False
    v = shared.pop()
    if t.vertex_class(v) != "V2":
        return False
    if t.q[e1] != t.q[e2]:
        return False
    v1 = t.other_end(e1, v)
    v2 = t.other_end(e2, v)
    try:
        return t.i_mov(v1, e1) == t.i_mov(v, e2) and t.i_mov(v, e1) == t.i_mov(v2, e2)
    except Invalid:
        return False


def combinable_pairs(t):
    """The set P(t) of combinable pairs, as sorted name pairs."""
    pairs = []
    for v in t.vertices_of_class("V2"):
        first, second = t.incident(v)
        if combinable(t, first, second):
            pairs.append((first, second))
    return sorted(pairs)


def _merged_name(e1, e2):
    return "+".join(sorted(e1.split("+") + e2.split("+")))


def combine(t, pair):
    """Replace v, e1 and e2 by a single edge e12 = (v1, v2).

    Returns
    -------
    combined : ``trees.DecoratedTree``
        The new tree; Mon(v1, e12) = Mon(v1, e1), Mon(v2, e12) = Mon(v2, e2).
    phi : dict
        Edge map from the edges of ``t`` to the edges of ``combined``.

    Raises
    ------
    NotCombinable
        If the pair is not combinable.
    """
    e1, e2 = sorted(pair)
    if not combinable(t, e1, e2):
        raise NotCombinable(f"Edges {e1!r} and {e2!r} are not combinable.")
    v = (set(t.edges[e1]) & set(t.edges[e2])).pop()
    v1 = t.other_end(e1, v)
    v2 = t.other_end(e2, v)
    merged = _merged_name(e1, e2)
    veval = {w: mu for w, mu in t.veval.items() if w != v}
    edges = {e: ends for e, ends in t.edges.items() if e not in (e1, e2)}
    edges[merged] = (v1, v2)
    q = {e: value for e, value in t.q.items() if e not in (e1, e2)}
    q[merged] = t.q[e1]
    flag_mon = {flag: mon for flag, mon in t.flag_mon.items() if flag[1] not in (e1, e2)}
    flag_mon[(v1, merged)] = t.flag_mon[(v1, e1)]
    flag_mon[(v2, merged)] = t.flag_mon[(v2, e2)]
    combined = DecoratedTree(t.d, t.r, veval, edges, q, flag_mon, t.marks, t.mark_mon)
    phi = {e: (merged if e in (e1, e2) else e) for e in t.edges}
    return combined, phi


def combine_set(t, pairs):
    """Combine every pair of ``pairs`` (a subset of P(t)) in the given order;
    returns the combined tree and the composed edge map.
    """
    available = {frozenset(pair) for pair in combinable_pairs(t)}
    ordered = []
    for pair in pairs:
        key = frozenset(pair)
        if key not in available:
            raise NotCombinable(f"{tuple(sorted(pair))} is not a combinable pair of the tree.")
        if key not in ordered:
            ordered.append(key)
    current = t
    phi = {e: e for e in t.edges}
    for key in ordered:
        a, b = (phi[e] for e in sorted(key))
        current, step = combine(current, (a, b))
        phi = {e: step[phi[e]] for e in phi}
    return current, phi


def minimal_form(t):
    """Comb(t, P(t)), the unique minimal tree below t."""
    verdict = validate(t)
    if not verdict.passed:
        raise Invalid(f"Cannot minimize an invalid tree; failed {verdict.failed()}.")
    minimal, _ = combine_set(t, combinable_pairs(t))
    return minimal


def edge_map_fibers(phi):
    """The partition of the source edges induced by an edge map."""
    fibers = {}
    for source, target in phi.items():
        fibers.setdefault(target, set()).add(source)
    return sorted(tuple(sorted(fiber)) for fiber in fibers.values())


def pairs_from_edge_map(t, combined, phi):
    """Recover the combined subset E of P(t) from Comb(t, E) and its edge map:
    a pair lies in E iff both of its edges map to the same edge.
    """
    for target in phi.values():
        if target not in combined.edges:
            raise BadEdge(f"Edge map sends an edge to {target!r}, which is not an edge of the combined tree.")
    return [pair for pair in combinable_pairs(t) if phi[pair[0]] == phi[pair[1]]]


def subsets_of_pairs(t):
    pairs = combinable_pairs(t)
    return list(chain.from_iterable(combinations(pairs, n) for n in range(len(pairs) + 1)))


def is_refinement(t, t_prime):
    """True iff t_prime <= t, that is t_prime is obtained from t by combining edges."""
    return any(combine_set(t, subset)[0] == t_prime for subset in subsets_of_pairs(t))


def _fraction_key(value):
    return (value.numerator, value.denominator)


def _encode(t, v, parent):
    children = []
    for e in t.incident(v):
        if e == parent:
            continue
        w = t.other_end(e, v)
        children.append((_fraction_key(t.q[e]), t.flag_mon[(v, e)].sort_key(),
                         t.flag_mon[(w, e)].sort_key(), _encode(t, w, e)))
    marks = tuple(sorted((b, t.mark_mon[b].sort_key() if b in t.mark_mon else ()) for b in t.marks_at(v)))
    return (tuple(t.veval[v]), marks, tuple(sorted(children)))


def canonical_form(t):
    """A name-independent encoding of the decorated tree.

    Every vertex is tried as a root and the least encoding is kept; the
    children of each vertex are sorted by (q, flag monodromies, subtree).
    """
    return min(_encode(t, v, None) for v in t.vertices)


def chain_tree(moves, mark_ends=True):
    """A chain v0 - v1 - ... - vn built from consecutive one-edge moves,
    marked b1 at v0 and b2 at vn unless ``mark_ends`` is off.
    """
    if not moves:
        raise ShapeMismatch("A chain needs at least one move.")
    for previous, following in zip(moves, moves[1:]):
        if previous.target != following.base:
            raise ShapeMismatch(f"{following!r} does not start where {previous!r} ends.")
    base = moves[0].base
    veval = {"v0": base.mu}
    edges, q, flag_mon = {}, {}, {}
    for n, kappa in enumerate(moves, start=1):
        source, target = f"v{n - 1}", f"v{n}"
        name = f"e{n}"
        veval[target] = kappa.target.mu
        edges[name] = (source, target)
        q[name] = kappa.q
        flag_mon[(source, name)] = kappa.base.sigma
        flag_mon[(target, name)] = kappa.target.sigma
    marks, mark_mon = {}, {}
    if mark_ends:
        last = f"v{len(moves)}"
        marks = {"b1": "v0", "b2": last}
        mark_mon = {"b1": base.sigma, "b2": moves[-1].target.sigma}
    return DecoratedTree(base.d, base.r, veval, edges, q, flag_mon, marks, mark_mon)


def one_edge_tree(kappa, mark_target=True):
    """The one-edge tree of ``kappa`` with mark b1 at the source vertex.

    With ``mark_target`` the far vertex carries b2 as well; without it the
    far vertex is a bare leaf, which validates only when sigma' is the
    ones multipartition.
    """
    t = chain_tree([kappa], mark_ends=True)
    if not mark_target:
        t.marks.pop("b2")
        t.mark_mon.pop("b2")
    return t


def split_edge(kappa, blocks):
    """A chain refining ``kappa``: the blocks of Mov move one after another
    from i1 to i2 with the same q.
    """
    blocks = [Partition(block) for block in blocks]
    union = Partition([eta for block in blocks for eta in block])
    if union != kappa.mov or any(len(block) == 0 for block in blocks):
        raise ShapeMismatch(f"Blocks {[str(b) for b in blocks]} do not split {kappa.mov}.")
    moves = []
    current = kappa.base
    for block in blocks:
        step = EdgeClass(current, kappa.i1, kappa.i2, block, kappa.q)
        moves.append(step)
        current = step.target
    return chain_tree(moves)


def random_chain(rng, d, r, n_edges, beta_cap=2, continue_prob=0.5):
    """A random valid chain of up to ``n_edges`` one-edge moves.

    With probability ``continue_prob`` a step repeats the previous move's
    (i1, i2, q) when possible, which produces combinable pairs.
    """
    sectors = enumerate_sectors(d, r)
    current = sectors[rng.randint(0, len(sectors) - 1)]
    moves = []
    for _ in range(n_edges):
        candidates = enumerate_edges(current, beta_cap)
        if not candidates:
            break
        if moves and rng.random() < continue_prob:
            previous = moves[-1]
            same = [kappa for kappa in candidates
                    if (kappa.i1, kappa.i2, kappa.q) == (previous.i1, previous.i2, previous.q)]
            if same:
                candidates = same
        kappa = candidates[rng.randint(0, len(candidates) - 1)]
        moves.append(kappa)
        current = kappa.target
    return chain_tree(moves)
