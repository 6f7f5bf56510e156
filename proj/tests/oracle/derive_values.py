"""Independent 50-digit reference values frozen into the C++ tests.

Builds covariance matrices by direct block arithmetic, evaluates log ratios and the
partial-transpose spectrum with mpmath, and bisects thresholds. Run: python3 derive_values.py
"""

import mpmath as mp

mp.mp.dps = 50


def tmsv(r):
    a, c = mp.cosh(2 * r), mp.sinh(2 * r)
    return mp.matrix([[a, 0, c, 0], [0, a, 0, -c], [c, 0, a, 0], [0, -c, 0, a]])


def local(V, modes, s, noise):
    V = V.copy()
    for m in modes:
        i = 2 * m
        for a in range(4):
            for b in range(4):
                fa = mp.sqrt(s) if i <= a < i + 2 else 1
                fb = mp.sqrt(s) if i <= b < i + 2 else 1
                V[a, b] *= fa * fb
        for a in range(2):
            for b in range(2):
                V[i + a, i + b] += noise[a][b]
    return V


def laser(g, k, t):
    g, k, t = mp.mpf(g), mp.mpf(k), mp.mpf(t)
    R = mp.e ** (-2 * (k - g) * t)
    A = (k + g) / (k - g) * (1 - R) if k != g else 2 * k * t * 2
    return R, A


def evolve(V, channel, side, t):
    modes = {"a": [0], "b": [1], "two": [0, 1]}[side]
    kind = channel[0]
    if kind == "laser":
        g, k = channel[1], channel[2]
        R, A = laser(g, k, t)
        return local(V, modes, R, [[A, 0], [0, A]])
    if kind == "thermal":
        k, n = mp.mpf(channel[1]), mp.mpf(channel[2])
        R = mp.e ** (-2 * k * t)
        A = (2 * n + 1) * (1 - R)
        return local(V, modes, R, [[A, 0], [0, A]])
    if kind == "ps":
        k, n, M = mp.mpf(channel[1]), mp.mpf(channel[2]), mp.mpf(channel[3])
        T = mp.e ** (-2 * k * t)
        N = 2 * n + 1
        vinf = [[(1 - T) * (N + 2 * M), 0], [0, (1 - T) * (N - 2 * M)]]
        return local(V, modes, T, vinf)
    raise ValueError(kind)


def block(V, i, j):
    return mp.matrix([[V[i, j], V[i, j + 1]], [V[i + 1, j], V[i + 1, j + 1]]])


def log_ratio(V, steering):
    i = 0 if steering == "A" else 2
    return mp.log(mp.det(block(V, i, i)) / mp.det(V)) / 2


def nu_minus_pt(V):
    W = V.copy()
    for a in range(4):
        W[3, a] *= -1
        W[a, 3] *= -1
    Om = mp.matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    ev = mp.eig(Om * W)[0]
    return min(abs(e) for e in ev)


def quantity(V, q):
    if q == "AtoB":
        return log_ratio(V, "A")
    if q == "BtoA":
        return log_ratio(V, "B")
    if q == "two":
        return min(log_ratio(V, "A"), log_ratio(V, "B"))
    if q == "EN":
        return -mp.log(nu_minus_pt(V))
    raise ValueError(q)


def threshold(channel, side, r, q, tmax=10):
    f = lambda t: quantity(evolve(tmsv(mp.mpf(r)), channel, side, t), q)
    lo, hi = mp.mpf(0), None
    n = 2000
    prev = f(mp.mpf(tmax) / n / 1000)
    for i in range(1, n + 1):
        t = mp.mpf(tmax) * i / n
        v = f(t)
        if v <= 0:
            hi = t
            lo = mp.mpf(tmax) * (i - 1) / n
            break
    if hi is None:
        return "inf"
    for _ in range(120):
        mid = (lo + hi) / 2
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def show(name, v):
    print(f"{name:58s} {mp.nstr(v, 17) if v != 'inf' else 'inf'}")


if __name__ == "__main__":
    show("thermal two-way r=0.5 nbar=1", threshold(("thermal", 1, 1), "two", 0.5, "two"))
    show("thermal two-way r=0.5 nbar=0.2", threshold(("thermal", 1, 0.2), "two", 0.5, "two"))
    show("thermal two-way r=0.88 nbar=0.1", threshold(("thermal", 1, 0.1), "two", 0.88, "two"))
    for gam in (0.5, 1, 2):
        ch = ("laser", gam, 1)
        for q in ("AtoB", "BtoA"):
            show(f"laser g={gam} side b r=0.5 {q}", threshold(ch, "b", 0.5, q))
        show(f"laser g={gam} two r=0.5 two-way", threshold(ch, "two", 0.5, "two"))
        show(f"laser g={gam} two r=0.5 EN", threshold(ch, "two", 0.5, "EN"))
    show("laser g=0.5 side b r=0.5 EN", threshold(("laser", 0.5, 1), "b", 0.5, "EN"))
    ps = ("ps", 1, 1, mp.sqrt(2))
    show("ps nbar=1 M=sqrt2 side b r=0.5 AtoB", threshold(ps, "b", 0.5, "AtoB"))
    show("ps nbar=1 M=sqrt2 side b r=0.5 BtoA", threshold(ps, "b", 0.5, "BtoA"))
    show("ps nbar=1 M=1 two r=0.6 two-way", threshold(("ps", 1, 1, 1), "two", 0.6, "two"))
    V = evolve(tmsv(mp.mpf("0.5")), ("thermal", 1, 1), "b", mp.mpf("0.05"))
    show("point thermal nbar=1 b r=0.5 kt=0.05 G AtoB", quantity(V, "AtoB"))
    show("point thermal nbar=1 b r=0.5 kt=0.05 G BtoA", quantity(V, "BtoA"))
    show("point thermal nbar=1 b r=0.5 kt=0.05 E_N", quantity(V, "EN"))
    a, b = V[0, 0], V[2, 2]
    c = V[0, 2]
    show("point reid AtoB (product)", ((b - c * c / a) / 2) ** 2)
    show("point reid BtoA (product)", ((a - c * c / b) / 2) ** 2)
