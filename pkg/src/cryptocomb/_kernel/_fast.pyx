# cython: boundscheck=False, wraparound=False, nonecheck=False, cdivision=True
"""Compiled weighted-trace kernel; mirrors _pure.trace_part_q exactly.

Per basis column the letter actions touch only the two states that differ
in the (i, i+1) bit pair, so each state's coefficient polynomial is kept
as a dense int64 window indexed by q-exponent plus a fixed offset. The
window width 4L+5 covers the worst case: every letter shifts exponents
by at most 2.

Coefficients are C int64 with an overflow guard: if any magnitude passes
2^60 the kernel raises OverflowError and the caller is expected to redo
the computation with the exact pure-Python kernel. The guard threshold
leaves headroom so no intermediate sum can wrap before the per-letter
check runs.
"""
from libc.stdlib cimport calloc, free, malloc

from ..errors import Cancelled

cdef long long MAXC = 1152921504606846976  # 2^60


def trace_part_q(int n, letters, cancel=None):
    """Map of q-exponent to coefficient for the mu-weighted trace."""
    cdef int L = len(letters)
    if n < 1 or n > 16:
        raise ValueError("strand count out of range for compiled kernel")
    if L > 4000:
        raise ValueError("word too long for compiled kernel")

    cdef int dim = 1 << n
    cdef int W = 4 * L + 5
    cdef int offset = 2 * L + 2

    cdef int *idx = <int *> malloc(max(L, 1) * sizeof(int))
    cdef int *sgn = <int *> malloc(max(L, 1) * sizeof(int))
    cdef long long *coeff = <long long *> calloc(<size_t> dim * <size_t> W, sizeof(long long))
    cdef int *lo = <int *> malloc(dim * sizeof(int))
    cdef int *hi = <int *> malloc(dim * sizeof(int))
    cdef int *pop = <int *> malloc(dim * sizeof(int))
    cdef long long *sc1 = <long long *> malloc(W * sizeof(long long))
    cdef long long *sc2 = <long long *> malloc(W * sizeof(long long))
    if not (idx and sgn and coeff and lo and hi and pop and sc1 and sc2):
        for p in (<size_t> idx, <size_t> sgn, <size_t> coeff, <size_t> lo,
                  <size_t> hi, <size_t> pop, <size_t> sc1, <size_t> sc2):
            if p:
                free(<void *> p)
        raise MemoryError()

    cdef int li, i, sg, s, s0, s01, s10, k, base01, base10
    cdef int him, lom, both
    cdef int lo01, hi01, lo10, hi10, n1lo, n1hi, n2lo, n2hi
    cdef bint e01, e10
    cdef long long c, maxabs
    total = {}

    try:
        # letters are applied right-to-left to each basis ket
        for li in range(L):
            i, sg = letters[L - 1 - li]
            if i < 1 or i > n - 1:
                raise ValueError(f"generator {i} out of range for {n} strands")
            if sg != 1 and sg != -1:
                raise ValueError("sign must be +1 or -1")
            idx[li] = i
            sgn[li] = sg
        for s in range(dim):
            lo[s] = 1
            hi[s] = 0
            pop[s] = (<object> s).bit_count()

        for s0 in range(dim):
            lo[s0] = offset
            hi[s0] = offset
            coeff[<size_t> s0 * W + offset] = 1

            for li in range(L):
                if cancel is not None and cancel():
                    raise Cancelled("trace computation cancelled")
                i = idx[li]
                sg = sgn[li]
                him = 1 << (n - i)
                lom = 1 << (n - i - 1)
                both = him | lom
                maxabs = 0
                for s in range(dim):
                    # want bit pattern a=0, b=1 at (strand i, strand i+1)
                    if (s & him) != 0 or (s & lom) == 0:
                        continue
                    s01 = s
                    s10 = s ^ both
                    lo01 = lo[s01]; hi01 = hi[s01]
                    lo10 = lo[s10]; hi10 = hi[s10]
                    e01 = lo01 > hi01
                    e10 = lo10 > hi10
                    if e01 and e10:
                        continue
                    base01 = s01 * W
                    base10 = s10 * W

                    if sg > 0:
                        # new01 = -q * p10
                        if e10:
                            n1lo = 1; n1hi = 0
                        else:
                            n1lo = lo10 + 1; n1hi = hi10 + 1
                            for k in range(n1lo, n1hi + 1):
                                sc1[k] = -coeff[base10 + k - 1]
                        # new10 = -q * p01 + (1 - q^2) * p10
                        if e01:
                            n2lo = lo10; n2hi = hi10 + 2
                        elif e10:
                            n2lo = lo01 + 1; n2hi = hi01 + 1
                        else:
                            n2lo = min(lo01 + 1, lo10)
                            n2hi = max(hi01 + 1, hi10 + 2)
                        for k in range(n2lo, n2hi + 1):
                            sc2[k] = 0
                        if not e01:
                            for k in range(lo01, hi01 + 1):
                                sc2[k + 1] -= coeff[base01 + k]
                        if not e10:
                            for k in range(lo10, hi10 + 1):
                                c = coeff[base10 + k]
                                sc2[k] += c
                                sc2[k + 2] -= c
                    else:
                        # new01 = (1 - q^-2) * p01 - q^-1 * p10
                        if e10:
                            n1lo = lo01 - 2; n1hi = hi01
                        elif e01:
                            n1lo = lo10 - 1; n1hi = hi10 - 1
                        else:
                            n1lo = min(lo01 - 2, lo10 - 1)
                            n1hi = max(hi01, hi10 - 1)
                        for k in range(n1lo, n1hi + 1):
                            sc1[k] = 0
                        if not e01:
                            for k in range(lo01, hi01 + 1):
                                c = coeff[base01 + k]
                                sc1[k] += c
                                sc1[k - 2] -= c
                        if not e10:
                            for k in range(lo10, hi10 + 1):
                                sc1[k - 1] -= coeff[base10 + k]
                        # new10 = -q^-1 * p01
                        if e01:
                            n2lo = 1; n2hi = 0
                        else:
                            n2lo = lo01 - 1; n2hi = hi01 - 1
                            for k in range(n2lo, n2hi + 1):
                                sc2[k] = -coeff[base01 + k + 1]

                    # write back: clear old ranges, copy scratch, set bounds
                    if not e01:
                        for k in range(lo01, hi01 + 1):
                            coeff[base01 + k] = 0
                    if not e10:
                        for k in range(lo10, hi10 + 1):
                            coeff[base10 + k] = 0
                    if n1lo <= n1hi:
                        for k in range(n1lo, n1hi + 1):
                            c = sc1[k]
                            coeff[base01 + k] = c
                            if c < 0:
                                c = -c
                            if c > maxabs:
                                maxabs = c
                    lo[s01] = n1lo; hi[s01] = n1hi
                    if n2lo <= n2hi:
                        for k in range(n2lo, n2hi + 1):
                            c = sc2[k]
                            coeff[base10 + k] = c
                            if c < 0:
                                c = -c
                            if c > maxabs:
                                maxabs = c
                    lo[s10] = n2lo; hi[s10] = n2hi
                if maxabs > MAXC:
                    raise OverflowError("coefficient exceeded the int64 guard")

            # only the diagonal entry survives, weighted by t^popcount
            if lo[s0] <= hi[s0]:
                for k in range(lo[s0], hi[s0] + 1):
                    c = coeff[<size_t> s0 * W + k]
                    if c:
                        e = k - offset + 2 * pop[s0]
                        v = total.get(e, 0) + c
                        if v:
                            total[e] = v
                        else:
                            del total[e]
            # reset every active row for the next column
            for s in range(dim):
                if lo[s] <= hi[s]:
                    base01 = s * W
                    for k in range(lo[s], hi[s] + 1):
                        coeff[base01 + k] = 0
                    lo[s] = 1
                    hi[s] = 0
    finally:
        free(idx); free(sgn); free(coeff); free(lo); free(hi)
        free(pop); free(sc1); free(sc2)
    return total
