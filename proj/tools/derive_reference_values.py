"""Reference values for tests/test_radii.cpp.

Evaluates each radius formula exactly as written (no algebraic
simplification) in 40-digit arithmetic and prints a C++ table. The outer
radius of H_Q_IN_J_FROM_JR is instead obtained by maximising q(x, y) over
the boundary of B_j(x, r) numerically.

    python3 tools/derive_reference_values.py > /tmp/table.inc
"""

import mpmath as mp

mp.mp.dps = 40

E = mp.e
sqrt, log, exp, sin, asin, acosh, cosh = mp.sqrt, mp.log, mp.exp, mp.sin, mp.asin, mp.acosh, mp.cosh


def r_q(a):
    return min(1 / sqrt(1 + a * a), a / sqrt(1 + a * a))


def j_in_q(r, a):
    m = log(1 + r * (a + 1 / a))
    w = 1 + a * a
    if a <= 1:
        M = log(a * (1 - r * r * w) / (a - r * sqrt(1 - r * r) * w))
    else:
        M = log((a + r * sqrt(1 - r * r) * w) / (a * (1 - r * r * w)))
    return m, M


def q_from_j(r, a):
    c = exp(r) - 1
    near = c * a / sqrt((1 + a * a) * (exp(2 * r) + a * a))
    far = c * a / sqrt((1 + a * a) * (1 + a * a * exp(2 * r)))
    return near, far


def punctured_kq(r, a):
    m = log(1 + r * (a + 1 / a))
    if a <= 1:
        f = r * (1 + a * a) / (2 * sqrt(1 - r * r) * a - 2 * r)
    else:
        f = (r + r * a * a) / (2 * sqrt(1 - r * r) * a - 2 * r * a * a)
    return m, 2 * asin(f)


def uniform_out(r):
    c = exp(r) - 1
    return sqrt(c * (c + sqrt(17 + exp(r) * (exp(r) - 2)))) / (2 * sqrt(2))


def half_chordal_extremes(r, a, steps=20000):
    """min and max of q(x, y) over the boundary of B_j(a e_2, r) in H^2."""
    c = exp(r) - 1

    def q_at(phi):
        u1, u2 = mp.sin(phi), mp.cos(phi)
        t = c * a if u2 >= 0 else c * a / (1 - c * u2)
        y1, y2 = t * u1, a + t * u2
        return sqrt(y1 ** 2 + (y2 - a) ** 2) / (sqrt(1 + a * a) * sqrt(1 + y1 ** 2 + y2 ** 2))

    # By symmetry phi in [0, pi] suffices.
    grid = [mp.pi * i / steps for i in range(steps + 1)]
    vals = [q_at(p) for p in grid]
    out = []
    for sign in (1, -1):
        k = max(range(len(vals)), key=lambda i: sign * vals[i])
        lo = grid[max(k - 1, 0)]
        hi = grid[min(k + 1, steps)]
        best = mp.findroot(lambda p: mp.diff(q_at, p), (lo + hi) / 2) if 0 < k < steps else grid[k]
        if not (lo <= best <= hi):
            best = grid[k]
        out.append(q_at(best))
    return min(out[1], vals[0], vals[-1]), out[0]


rows = []


def add(name, r, a, m=None, M=None, m_k=None, M_k=None):
    rows.append((name, r, a, m, M, m_k, M_k))


for r in (mp.mpf("0.1"), mp.mpf("0.5"), mp.mpf("0.68")):
    add("GEN_JK", r, None, log(2 - exp(-r)), log(1 / (2 - exp(r))))
for r in (mp.mpf("0.3"), mp.pi / 3, mp.mpf("1.5")):
    add("P_J_IN_K", r, None, m=log(1 + 2 * sin(r / 2)))
for r in (mp.mpf("0.3"), mp.mpf("1.0")):
    add("P_K_IN_J", r, None, M=2 * asin((exp(r) - 1) / 2))
for a in (mp.mpf("0.4"), mp.mpf("1"), mp.mpf("2.5")):
    for frac in (mp.mpf("0.3"), mp.mpf("0.9")):
        r = frac * r_q(a)
        m, M = j_in_q(r, a)
        add("P_J_IN_Q", r, a, m, M)
add("P_J_IN_Q", mp.mpf("0.5"), mp.mpf("1"), *j_in_q(mp.mpf("0.5"), mp.mpf(1)))
for a in (mp.mpf("0.4"), mp.mpf("1"), mp.mpf("2.5")):
    for r in (mp.mpf("0.2"), mp.mpf("0.9")):
        near, far = q_from_j(r, a)
        add("P_Q_IN_J_FROM_JR", r, a, near if a <= 1 else far, a * (exp(r) - 1) / (1 + a * a))
for a in (mp.mpf("0.6"), mp.mpf("1"), mp.mpf("3")):
    t = max(a, 1 / a)
    R = 2 * t / (sqrt(1 + t * t) * sqrt(1 + 9 * t * t))
    for frac in (mp.mpf("0.3"), mp.mpf("0.9")):
        add("P_K_IN_Q", frac * R, a, *punctured_kq(frac * R, a))
for a in (mp.mpf("0.4"), mp.mpf("2")):
    for r in (mp.mpf("0.2"), mp.mpf("0.8")):
        s = 2 * sin(r / 2)
        w = 1 + a * a
        m = min(s * a / sqrt(w * (a * a + (1 + s) ** 2)), s * a / sqrt(w * (1 + a * a * (1 + s) ** 2)))
        add("P_Q_IN_K_FROM_KR", r, a, m, a * (exp(r) - 1) / w)
for r in (mp.mpf("0.2"), mp.mpf("0.5"), mp.mpf("0.7")):
    add("P_UNIFORM_IN_Q", r, None, m=log(1 + 2 * r * r / sqrt(1 - r * r)))
for r in (mp.mpf("0.2"), mp.mpf("0.8")):
    add("P_UNIFORM_Q_OUT", r, None, M=uniform_out(r))
for r in (mp.mpf("0.2"), acosh(mp.mpf("1.5")), mp.mpf("3")):
    add("H_J_IN_K", r, None, m=log(1 + sqrt(2) * sqrt(cosh(r) - 1)))
for r in (mp.mpf("0.2"), mp.mpf("2")):
    add("H_K_IN_J", r, None, M=acosh(1 + (exp(r) - 1) ** 2 / 2))
for a in (mp.mpf("0.4"), mp.mpf("1"), mp.mpf("2.5")):
    for frac in (mp.mpf("0.3"), mp.mpf("0.9")):
        r = frac * r_q(a)
        s = sqrt(1 - r * r)
        w = 1 + a * a
        t1 = log(1 + r * w / (a * sqrt(1 - r * r - r * r * a * a)))
        t2 = log(1 + r * w / (s * a - r))
        t3 = log(1 + r * w / (a * (s - r * a)))
        add("H_J_IN_Q", r, a, min(t1, t2), max(t2, t3))
for a in (mp.mpf("0.3"), mp.mpf("1"), mp.mpf("1.6"), mp.mpf("4")):
    for r in (mp.mpf("0.2"), mp.mpf("1.5")):
        near, far = q_from_j(r, a)
        lo, hi = half_chordal_extremes(r, a)
        add("H_Q_IN_J_FROM_JR", r, a, near if a <= 1 else far, hi)
for a in (mp.mpf("0.4"), mp.mpf("1"), mp.mpf("2.5")):
    for frac in (mp.mpf("0.3"), mp.mpf("0.9")):
        r = frac * r_q(a)
        s = sqrt(1 - r * r)
        w = 1 + a * a
        A = log((a + r * s * w) / (a * (1 - r * r * w)))
        B = log(a * (r * r * w - 1) / (r * s * w - a))
        add("H_K_IN_Q", r, a, min(A, B), max(A, B))
for a in (mp.mpf("0.4"), mp.mpf("2.5")):
    for r in (mp.mpf("0.2"), mp.mpf("2")):
        near, far = q_from_j(r, a)
        add("H_Q_IN_K_FROM_KR", r, a, min(near, far), max(near, far))
for r in (mp.mpf("0.2"), mp.mpf("0.6")):
    add("H_UNIFORM_IN_Q", r, None, m=log(1 + 2 * r / (1 - r * r)), m_k=log(1 + 2 * r * r / sqrt(1 - r * r)))
for r in (mp.mpf("0.3"), mp.mpf("0.8")):
    add("H_UNIFORM_Q_OUT", r, None, M=(sqrt(2 + exp(r) * (exp(r) - 2)) - 1) / (exp(r) - 1), M_k=uniform_out(r))
add("H_UNIFORM_Q_OUT", mp.mpf("2"), None, M=(sqrt(2 + exp(2) * (exp(2) - 2)) - 1) / (exp(2) - 1))


def lit(v):
    return "std::nullopt" if v is None else mp.nstr(v, 17, min_fixed=-30, max_fixed=30)


for name, r, a, m, M, m_k, M_k in rows:
    print(f"    {{RelationId::{name}, {lit(r)}, {lit(a)}, {lit(m)}, {lit(M)}, {lit(m_k)}, {lit(M_k)}}},")
