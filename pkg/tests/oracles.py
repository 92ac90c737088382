"""Brute-force reference evaluations.

Everything here works on nested Python lists with explicit loops over basis
indices; nothing is shared with the package's contraction code. Each oracle
returns the set of failing witnesses in the same index convention as the
corresponding checker.
"""

from itertools import product


def L(arr):
    return arr.tolist() if hasattr(arr, "tolist") else arr


def _zero(x):
    return x == 0


def _vec_nonzero(v):
    return any(not _zero(t) for t in v)


def bracket_vec(c, x, y):
    """Bracket of two coordinate vectors through structure constants ``c``."""
    n = len(c)
    out = [0] * n
    for i in range(n):
        if _zero(x[i]):
            continue
        for j in range(n):
            if _zero(y[j]):
                continue
            for k in range(n):
                out[k] = out[k] + x[i] * y[j] * c[i][j][k]
    return out


def basis_bracket(c, i, j):
    return list(c[i][j])


def _nonzeros(c):
    n = len(c)
    return [[[(k, v) for k, v in enumerate(c[i][j]) if not _zero(v)] for j in range(n)] for i in range(n)]


def rlj_failures(c):
    """Triples ``(x, y, z)`` with ``[x,[y,z]] - [[x,y],z] + [[x,z],y] != 0``."""
    c = L(c)
    n = len(c)
    nz = _nonzeros(c)
    bad = set()
    for x, y, z in product(range(n), repeat=3):
        total = [0] * n
        for k, v in nz[y][z]:
            for l, w in nz[x][k]:
                total[l] += v * w
        for k, v in nz[x][y]:
            for l, w in nz[k][z]:
                total[l] -= v * w
        for k, v in nz[x][z]:
            for l, w in nz[k][y]:
                total[l] += v * w
        if _vec_nonzero(total):
            bad.add((x, y, z))
    return bad


def lie_failures(c):
    """``(antisym pairs, jacobi triples)``; antisym pairs use ``i <= j``."""
    c = L(c)
    n = len(c)
    anti = set()
    for i in range(n):
        if _vec_nonzero(c[i][i]):
            anti.add((i, i))
        for j in range(i + 1, n):
            if _vec_nonzero([a + b for a, b in zip(c[i][j], c[j][i])]):
                anti.add((i, j))
    jac = set()
    for x, y, z in product(range(n), repeat=3):
        total = [0] * n
        for a, b, d in ((x, y, z), (y, z, x), (z, x, y)):
            ea = [0] * n
            ea[a] = 1
            t = bracket_vec(c, ea, basis_bracket(c, b, d))
            total = [s + u for s, u in zip(total, t)]
        if _vec_nonzero(total):
            jac.add((x, y, z))
    return anti, jac


def comm_failures(mult, unit):
    """``(comm pairs i < j, assoc triples, unit indices)``."""
    c, u = L(mult), L(unit)
    n = len(c)
    comm = {(i, j) for i in range(n) for j in range(i + 1, n) if _vec_nonzero([a - b for a, b in zip(c[i][j], c[j][i])])}
    assoc = set()
    for i, j, k in product(range(n), repeat=3):
        ek = [0] * n
        ek[k] = 1
        ei = [0] * n
        ei[i] = 1
        left = bracket_vec(c, c[i][j], ek)
        right = bracket_vec(c, ei, c[j][k])
        if _vec_nonzero([a - b for a, b in zip(left, right)]):
            assoc.add((i, j, k))
    units = set()
    for i in range(n):
        ei = [0] * n
        ei[i] = 1
        prod_ = bracket_vec(c, u, ei)
        if _vec_nonzero([a - b for a, b in zip(prod_, ei)]):
            units.add((i,))
    return comm, assoc, units


def act_vec(action, a, m):
    """``a . m`` for coordinate vectors through ``action[i][j][k]``."""
    act = L(action)
    dM = len(act[0]) if act else 0
    out = [0] * dM
    for i in range(len(act)):
        if _zero(a[i]):
            continue
        for j in range(dM):
            if _zero(m[j]):
                continue
            for k in range(dM):
                out[k] = out[k] + a[i] * m[j] * act[i][j][k]
    return out


def apply(mat, v):
    mat = L(mat)
    return [sum((row[j] * v[j] for j in range(len(v))), 0) for row in mat]


def matmul(a, b):
    cols = b.shape[1] if hasattr(b, "shape") else (len(b[0]) if b else 0)
    a, b = L(a), L(b)
    inner = len(b)
    return [[sum((a[i][k] * b[k][j] for k in range(inner)), 0) for j in range(cols)] for i in range(len(a))]


def unit(n, i):
    e = [0] * n
    e[i] = 1
    return e


def module_failures(A_mult, A_unit, action):
    """``(unit indices, assoc triples (i, j, k))`` for a left module."""
    c = L(A_mult)
    dA = len(c)
    act = L(action)
    dM = len(act[0]) if act else 0
    units = set()
    for k in range(dM):
        if _vec_nonzero([a - b for a, b in zip(act_vec(act, L(A_unit), unit(dM, k)), unit(dM, k))]):
            units.add((k,))
    assoc = set()
    for i, j, k in product(range(dA), range(dA), range(dM)):
        left = act_vec(act, c[i][j], unit(dM, k))
        right = act_vec(act, unit(dA, i), act_vec(act, unit(dA, j), unit(dM, k)))
        if _vec_nonzero([a - b for a, b in zip(left, right)]):
            assoc.add((i, j, k))
    return units, assoc


def is_derivation(A_mult, action, d):
    """``d`` is a ``(dim M, dim A)`` matrix; checks ``d(ab) = a.d(b) + b.d(a)``."""
    c = L(A_mult)
    dA = len(c)
    for i, j in product(range(dA), repeat=2):
        left = apply(d, c[i][j])
        r1 = act_vec(action, unit(dA, i), apply(d, unit(dA, j)))
        r2 = act_vec(action, unit(dA, j), apply(d, unit(dA, i)))
        if _vec_nonzero([a - b - e for a, b, e in zip(left, r1, r2)]):
            return False
    return True


def commutator(a, b):
    ab, ba = matmul(a, b), matmul(b, a)
    return [[x - y for x, y in zip(r, s)] for r, s in zip(ab, ba)]


def mat_nonzero(m):
    return any(_vec_nonzero(r) for r in m)


def lin_comb(coeffs, mats):
    mats = [L(m) for m in mats]
    rows, cols = len(mats[0]), len(mats[0][0]) if mats[0] else 0
    out = [[0] * cols for _ in range(rows)]
    for c, m in zip(coeffs, mats):
        if _zero(c):
            continue
        for r in range(rows):
            for s in range(cols):
                out[r][s] = out[r][s] + c * m[r][s]
    return out


def algebroid_failures(A_mult, A_unit, bracket, action, anchor):
    """Set of axiom ids violated by a Leibniz algebroid, by direct evaluation.

    Uses ids ``RLJ``, ``E/mod-unit``, ``E/mod-assoc``, ``anchor-der``,
    ``anchor-Alin``, ``LBanchor-antihom``, ``LBrule``.
    """
    c, act, rho = L(bracket), L(action), L(anchor)
    Am = L(A_mult)
    dA, dE = len(Am), len(c)
    out = set()
    if rlj_failures(c):
        out.add("RLJ")
    u, a = module_failures(Am, A_unit, act)
    if u:
        out.add("E/mod-unit")
    if a:
        out.add("E/mod-assoc")
    for e in range(dE):
        if not is_derivation(Am, Am, rho[e]):
            out.add("anchor-der")
    for a_, e in product(range(dA), range(dE)):
        # rho(a.e) = a rho(e)
        lhs = lin_comb(act[a_][e], rho)
        rhs = matmul([[Am[a_][s][r] for s in range(dA)] for r in range(dA)], rho[e])
        if mat_nonzero([[x - y for x, y in zip(p, q)] for p, q in zip(lhs, rhs)]):
            out.add("anchor-Alin")
    for e1, e2 in product(range(dE), repeat=2):
        lhs = lin_comb(c[e1][e2], rho)
        rhs = commutator(rho[e2], rho[e1])
        if mat_nonzero([[x - y for x, y in zip(p, q)] for p, q in zip(lhs, rhs)]):
            out.add("LBanchor-antihom")
    for a_, e1, e2 in product(range(dA), range(dE), range(dE)):
        ae1 = act_vec(act, unit(dA, a_), unit(dE, e1))
        left = bracket_vec(c, ae1, unit(dE, e2))
        r1 = act_vec(act, unit(dA, a_), c[e1][e2])
        coef = apply(rho[e2], unit(dA, a_))
        r2 = act_vec(act, coef, unit(dE, e1))
        if _vec_nonzero([x - y - z for x, y, z in zip(left, r1, r2)]):
            out.add("LBrule")
    return out


def locality_failures(bracket, action, anchor, dA):
    c, act, rho = L(bracket), L(action), L(anchor)
    dE = len(c)
    bad = set()
    for e1, a_, e2 in product(range(dE), range(dA), range(dE)):
        ae2 = act_vec(act, unit(dA, a_), unit(dE, e2))
        left = bracket_vec(c, unit(dE, e1), ae2)
        r1 = act_vec(act, unit(dA, a_), c[e1][e2])
        coef = apply(rho[e1], unit(dA, a_))
        r2 = act_vec(act, coef, unit(dE, e2))
        if _vec_nonzero([x - y + z for x, y, z in zip(left, r1, r2)]):
            bad.add((e1, a_, e2))
    return bad


def lr_pair_failures(A_mult, L_bracket, action, anchor):
    """Axiom ids violated by a Lie-Rinehart pair (the Lie algebra and module
    axioms are checked separately)."""
    Am, c, act, rho = L(A_mult), L(L_bracket), L(action), L(anchor)
    dA, dL = len(Am), len(c)
    out = set()
    for x in range(dL):
        if not is_derivation(Am, Am, rho[x]):
            out.add("anchor-der")
    for a_, x in product(range(dA), range(dL)):
        lhs = lin_comb(act[a_][x], rho)
        rhs = matmul([[Am[a_][s][r] for s in range(dA)] for r in range(dA)], rho[x])
        if mat_nonzero([[p - q for p, q in zip(r, s)] for r, s in zip(lhs, rhs)]):
            out.add("anchor-Alin")
    for x, y in product(range(dL), repeat=2):
        lhs = lin_comb(c[x][y], rho)
        rhs = commutator(rho[x], rho[y])
        if mat_nonzero([[p - q for p, q in zip(r, s)] for r, s in zip(lhs, rhs)]):
            out.add("anchor-lie")
    for x, a_, y in product(range(dL), range(dA), range(dL)):
        ay = act_vec(act, unit(dA, a_), unit(dL, y))
        left = bracket_vec(c, unit(dL, x), ay)
        r1 = act_vec(act, unit(dA, a_), c[x][y])
        coef = apply(rho[x], unit(dA, a_))
        r2 = act_vec(act, coef, unit(dL, y))
        if _vec_nonzero([p - q - s for p, q, s in zip(left, r1, r2)]):
            out.add("LR-rule")
    return out


def derivation_dim_sympy(A_mult, M_action=None):
    """Dimension of ``Der(A, M)`` by an independent sympy nullspace."""
    import sympy

    Am = L(A_mult)
    act = L(M_action) if M_action is not None else Am
    dA = len(Am)
    dM = len(act[0]) if act else 0
    syms = sympy.symbols(f"d0:{dM * dA}") if dM * dA else ()
    d = [[syms[r * dA + s] for s in range(dA)] for r in range(dM)]
    eqs = []
    for i, j in product(range(dA), repeat=2):
        left = apply(d, [sympy.Rational(str(t)) for t in Am[i][j]])
        r1 = act_vec([[[sympy.Rational(str(t)) for t in r] for r in m] for m in act], unit(dA, i), apply(d, unit(dA, j)))
        r2 = act_vec([[[sympy.Rational(str(t)) for t in r] for r in m] for m in act], unit(dA, j), apply(d, unit(dA, i)))
        eqs += [sympy.expand(a - b - e) for a, b, e in zip(left, r1, r2)]
    if not syms:
        return 0
    mat, _ = sympy.linear_eq_to_matrix(eqs, syms) if eqs else (sympy.zeros(0, len(syms)), None)
    return len(syms) - mat.rank()
