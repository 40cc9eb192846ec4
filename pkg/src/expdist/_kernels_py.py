"""Pure-Python exact matrix kernels.

Matrices travel as two flat row-major lists (numerators, denominators)
of Python ints. Invariant on entry and exit: every denominator is
positive and every pair is reduced. The compiled backend in
``_kernels_c.pyx`` mirrors this module function for function; keep the
two in sync.
"""

from math import gcd


def _add(an, ad, bn, bd):
    # Henrici's algorithm: reduced inputs give reduced output.
    g = gcd(ad, bd)
    if g == 1:
        return an * bd + bn * ad, ad * bd
    s = ad // g
    t = an * (bd // g) + bn * s
    g2 = gcd(t, g)
    if g2 == 1:
        return t, s * bd
    return t // g2, s * (bd // g2)


def _mul(an, ad, bn, bd):
    g1 = gcd(an, bd)
    if g1 > 1:
        an //= g1
        bd //= g1
    g2 = gcd(bn, ad)
    if g2 > 1:
        bn //= g2
        ad //= g2
    return an * bn, ad * bd


def _div(an, ad, bn, bd):
    # bn must be nonzero.
    g1 = gcd(an, bn)
    if g1 > 1:
        an //= g1
        bn //= g1
    g2 = gcd(bd, ad)
    if g2 > 1:
        bd //= g2
        ad //= g2
    n = an * bd
    d = ad * bn
    if d < 0:
        return -n, -d
    return n, d


def mat_mul(m, k, n, anum, aden, bnum, bden):
    """Product of an m-by-k and a k-by-n matrix."""
    cnum = [0] * (m * n)
    cden = [1] * (m * n)
    for i in range(m):
        arow = i * k
        for j in range(n):
            sn = 0
            sd = 1
            for l in range(k):
                pn = anum[arow + l]
                if pn == 0:
                    continue
                qn = bnum[l * n + j]
                if qn == 0:
                    continue
                pn, pd = _mul(pn, aden[arow + l], qn, bden[l * n + j])
                sn, sd = _add(sn, sd, pn, pd)
            idx = i * n + j
            cnum[idx] = sn
            cden[idx] = sd
    return cnum, cden


def det_bareiss(n, num, den):
    """Determinant by fraction-free Bareiss elimination.

    Rows are scaled to integers first; each Bareiss division is exact by
    construction, so all intermediate values stay integral.
    """
    if n == 0:
        return 1, 1
    a = []
    scale = 1
    for i in range(n):
        base = i * n
        row_lcm = 1
        for j in range(n):
            d = den[base + j]
            row_lcm = row_lcm // gcd(row_lcm, d) * d
        scale *= row_lcm
        a.append([num[base + j] * (row_lcm // den[base + j]) for j in range(n)])
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = -1
        for i in range(k, n):
            if a[i][k]:
                piv = i
                break
        if piv < 0:
            return 0, 1
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        ak = a[k]
        akk = ak[k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            if aik == 0:
                for j in range(k + 1, n):
                    ai[j] = (akk * ai[j]) // prev
            else:
                for j in range(k + 1, n):
                    ai[j] = (akk * ai[j] - aik * ak[j]) // prev
                ai[k] = 0
        prev = akk
    d = a[n - 1][n - 1]
    if sign < 0:
        d = -d
    g = gcd(d, scale)
    return d // g, scale // g


def inverse(n, num, den):
    """Inverse by plain exact Gauss-Jordan with first-nonzero pivoting.

    Returns ``None`` when the matrix is singular. Entries are reduced
    after every update, which keeps them small for the structured
    matrices this package produces.
    """
    if n == 0:
        return [], []
    w = 2 * n
    rn = []
    rd = []
    for i in range(n):
        base = i * n
        row_n = list(num[base:base + n]) + [0] * n
        row_d = list(den[base:base + n]) + [1] * n
        row_n[n + i] = 1
        rn.append(row_n)
        rd.append(row_d)
    for k in range(n):
        piv = -1
        for i in range(k, n):
            if rn[i][k]:
                piv = i
                break
        if piv < 0:
            return None
        if piv != k:
            rn[k], rn[piv] = rn[piv], rn[k]
            rd[k], rd[piv] = rd[piv], rd[k]
        kn = rn[k]
        kd = rd[k]
        pn = kn[k]
        pd = kd[k]
        if pn != pd:
            for j in range(k, w):
                if kn[j]:
                    kn[j], kd[j] = _div(kn[j], kd[j], pn, pd)
        for i in range(n):
            if i == k:
                continue
            fn = rn[i][k]
            if fn == 0:
                continue
            fd = rd[i][k]
            in_ = rn[i]
            id_ = rd[i]
            for j in range(k + 1, w):
                if kn[j]:
                    pn2, pd2 = _mul(fn, fd, kn[j], kd[j])
                    in_[j], id_[j] = _add(in_[j], id_[j], -pn2, pd2)
            in_[k] = 0
            id_[k] = 1
    out_n = []
    out_d = []
    for i in range(n):
        out_n.extend(rn[i][n:])
        out_d.extend(rd[i][n:])
    return out_n, out_d


def adjugate_sum(n, num, den):
    """Sum of all adjugate entries.

    Invertible path: det(M) times the entry sum of the Gauss-Jordan
    inverse. Singular path: signed minor expansion over every position.
    """
    dn, dd = det_bareiss(n, num, den)
    if dn != 0:
        inum, iden = inverse(n, num, den)
        sn = 0
        sd = 1
        for t in range(n * n):
            if inum[t]:
                sn, sd = _add(sn, sd, inum[t], iden[t])
        return _mul(dn, dd, sn, sd)
    total_n = 0
    total_d = 1
    for i in range(n):
        for j in range(n):
            mn = []
            md = []
            for r in range(n):
                if r == i:
                    continue
                base = r * n
                for c in range(n):
                    if c == j:
                        continue
                    mn.append(num[base + c])
                    md.append(den[base + c])
            dn2, dd2 = det_bareiss(n - 1, mn, md)
            if dn2:
                if (i + j) & 1:
                    dn2 = -dn2
                total_n, total_d = _add(total_n, total_d, dn2, dd2)
    return total_n, total_d
