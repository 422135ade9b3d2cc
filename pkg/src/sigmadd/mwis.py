"""Exact maximum-weight independent set for solver intersection graphs.

The graphs coming out of the sigma-6 pruning are chains, ladders and
constant-size blobs.  Rather than case-matching those shapes, the solver
applies exact local reductions until the graph is gone:

  * isolated vertices are taken;
  * pendant vertices fold into their neighbor (weight transfer);
  * degree-2 vertices with non-adjacent neighbors fold when their weight
    dominates both neighbors;
  * triangles shed a dominated vertex;
  * non-positive weights are dropped.

Every rule preserves the optimum exactly, and each application shrinks the
graph, so the sweep is linear.  Whatever stalls (constant-size blobs by the
pruned graph's structure theory, or arbitrarily long cyclic ladders) is
finished by exhaustive search / a frontier DP.  A reverse pass over the
reduction log lifts the reduced solution back to the original vertices.
"""

from collections import deque

BLOB_CAP = 40


class StructureError(AssertionError):
    """A stuck subgraph exceeds every bound the pruning theory allows."""


def solve_mwis(weights, adj, blob_cap=BLOB_CAP):
    """Maximum-weight independent set of a simple undirected graph.

    weights: {vertex: positive int}; adj: {vertex: set of vertices}.
    Returns (value, selected_set).  Deterministic for equal inputs.
    """
    w = dict(weights)
    g = {v: set(ns) for v, ns in adj.items()}
    for v in w:
        g.setdefault(v, set())
    for v, ns in g.items():
        for u in ns:
            if v not in g.get(u, ()):  # defensive: symmetrize
                g[u].add(v)

    value = 0
    log = []
    next_id = (max(w) + 1) if w else 0
    queue = deque(sorted(g))
    queued = set(queue)

    def touch(v):
        if v in g and v not in queued:
            queue.append(v)
            queued.add(v)

    def delete(v):
        for u in g[v]:
            g[u].discard(v)
            touch(u)
        del g[v]
        del w[v]

    while True:
        while queue:
            v = queue.popleft()
            queued.discard(v)
            if v not in g:
                continue
            if w[v] <= 0:
                delete(v)
                continue
            deg = len(g[v])
            if deg == 0:
                value += w[v]
                log.append(("take", v))
                delete(v)
                continue
            if deg == 1:
                (u,) = g[v]
                if w[v] >= w[u]:
                    value += w[v]
                    log.append(("take", v))
                    delete(v)
                    delete(u)
                else:
                    value += w[v]
                    w[u] -= w[v]
                    log.append(("pendant", v, u))
                    delete(v)
                    touch(u)
                continue
            if deg == 2:
                u, x = sorted(g[v])
                if x in g[u]:
                    # triangle: drop a dominated corner
                    if w[u] <= w[v]:
                        log.append(("drop", u))
                        delete(u)
                        touch(v)
                    elif w[x] <= w[v]:
                        log.append(("drop", x))
                        delete(x)
                        touch(v)
                    # else v is the strict minimum; the blob pass handles it
                    continue
                if w[v] >= w[u] and w[v] >= w[x]:
                    fold = next_id
                    next_id += 1
                    nbrs = (g[u] | g[x]) - {u, v, x}
                    value += w[v]
                    w[fold] = w[u] + w[x] - w[v]
                    log.append(("fold", v, u, x, fold))
                    delete(v)
                    delete(u)
                    delete(x)
                    g[fold] = set()
                    for y in nbrs:
                        if y in g:
                            g[fold].add(y)
                            g[y].add(fold)
                            touch(y)
                    touch(fold)
                continue
            # degree >= 3: wait for the blob pass

        if not g:
            break
        # reductions are exhausted; finish each stuck component exactly
        comp = _extract_component(g, min(g))
        if len(comp) <= blob_cap:
            got, sel = _brute_component(comp, g, w)
        else:
            got, sel = _ladder_dp(comp, g, w)
        value += got
        log.append(("blob", frozenset(sel)))
        for v in comp:
            delete(v)

    selected = set()
    for rec in reversed(log):
        kind = rec[0]
        if kind == "take":
            selected.add(rec[1])
        elif kind == "pendant":
            if rec[2] not in selected:
                selected.add(rec[1])
        elif kind == "fold":
            _, v, u, x, fold = rec
            if fold in selected:
                selected.discard(fold)
                selected.add(u)
                selected.add(x)
            else:
                selected.add(v)
        elif kind == "blob":
            selected |= rec[1]
    selected = {v for v in selected if v in weights}

    got = sum(weights[v] for v in selected)
    if got != value:
        raise StructureError("lifted solution weight %s != reduced value %s" % (got, value))
    for v in selected:
        if any(u in selected for u in adj.get(v, ())):
            raise StructureError("lifted solution is not independent")
    return value, selected


def _extract_component(g, seed):
    comp = [seed]
    seen = {seed}
    stack = [seed]
    while stack:
        v = stack.pop()
        for u in sorted(g[v]):
            if u not in seen:
                seen.add(u)
                comp.append(u)
                stack.append(u)
    return sorted(comp)


def _brute_component(comp, g, w):
    """Branch-and-bound over a constant-size component."""
    order = sorted(comp)
    best = [0, set()]

    def rec(avail, cur_val, cur_set):
        if cur_val + sum(w[v] for v in avail) <= best[0]:
            return
        if not avail:
            if cur_val > best[0]:
                best[0] = cur_val
                best[1] = set(cur_set)
            return
        v = max(avail, key=lambda y: (len(g[y] & avail), -order.index(y)))
        take = avail - g[v]
        take.discard(v)
        rec(take, cur_val + w[v], cur_set | {v})
        rec(avail - {v}, cur_val, cur_set)

    rec(set(order), 0, set())
    return best[0], best[1]


def _ladder_dp(comp, g, w):
    """Exact DP for cyclic (possibly twisted) ladders: all degrees 3, vertices
    pair into rungs, columns chain around a closed loop."""
    comp_set = set(comp)
    if any(len(g[v] & comp_set) != 3 for v in comp):
        raise StructureError("stuck component of %d vertices is not a ladder" % len(comp))

    def rung_partner(v):
        # the rung is the unique incident edge lying on two 4-cycles
        for u in sorted(g[v]):
            squares = 0
            for a in g[v] - {u}:
                if g[a] & (g[u] - {v}):
                    squares += 1
            if squares >= 2:
                return u
        raise StructureError("no rung at vertex %r" % (v,))

    a0 = min(comp)
    b0 = rung_partner(a0)
    cols = [(a0, b0)]
    placed = {a0, b0}
    # choose the first step deterministically
    a_prev, b_prev = a0, b0
    a_cur = min(g[a0] - {b0})
    b_candidates = (g[b0] - {a0}) & g[a_cur]
    if not b_candidates:
        raise StructureError("ladder walk failed at first column")
    b_cur = min(b_candidates)
    while a_cur not in placed and b_cur not in placed:
        cols.append((a_cur, b_cur))
        placed.update((a_cur, b_cur))
        a_nxt = g[a_cur] - {a_prev, b_cur}
        b_nxt = g[b_cur] - {b_prev, a_cur}
        if len(a_nxt) != 1 or len(b_nxt) != 1:
            raise StructureError("ladder walk lost the lines")
        a_prev, b_prev = a_cur, b_cur
        (a_cur,), (b_cur,) = a_nxt, b_nxt
    if len(placed) != len(comp):
        raise StructureError("stuck component is not a single ladder")
    if (a_cur, b_cur) == (a0, b0):
        twisted = False
    elif (a_cur, b_cur) == (b0, a0):
        twisted = True
    else:
        raise StructureError("ladder does not close properly")

    # states per column: 0 none, 1 top, 2 bottom; consecutive same side conflicts
    def allowed(prev_state, state, twist=False):
        if state == 0 or prev_state == 0:
            return True
        if twist:
            return prev_state == state  # top meets bottom across the seam
        return prev_state != state

    ncols = len(cols)
    best_total, best_states = None, None
    for first in (0, 1, 2):
        dp = {first: (w[cols[0][0]] if first == 1 else w[cols[0][1]] if first == 2 else 0, (first,))}
        for i in range(1, ncols):
            top, bot = cols[i]
            nxt = {}
            for state in (0, 1, 2):
                gain = w[top] if state == 1 else w[bot] if state == 2 else 0
                cand = None
                for prev_state, (val, path) in dp.items():
                    if allowed(prev_state, state):
                        if cand is None or val > cand[0]:
                            cand = (val, path)
                if cand is not None:
                    nxt[state] = (cand[0] + gain, cand[1] + (state,))
            dp = nxt
        for state, (val, path) in dp.items():
            if allowed(state, first, twist=twisted):
                if best_total is None or val > best_total:
                    best_total = val
                    best_states = path
    sel = set()
    for (top, bot), state in zip(cols, best_states):
        if state == 1:
            sel.add(top)
        elif state == 2:
            sel.add(bot)
    return best_total, sel
