# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled clause kernels; mirrors atmod._pykernels exactly."""

from libc.stdlib cimport malloc, free


cdef int _popcount(unsigned int x):
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef long _solve(unsigned int *cpos, unsigned int *cneg, int m,
                 unsigned int full, unsigned int assigned,
                 unsigned int values):
    cdef bint changed = True
    cdef int i, nfree
    cdef unsigned int pos, neg, free_pos, free_neg, rest, bit
    cdef long result
    while changed:
        changed = False
        for i in range(m):
            pos = cpos[i]
            neg = cneg[i]
            if (pos & values) or (neg & assigned & ~values):
                continue
            free_pos = pos & ~assigned
            free_neg = neg & ~assigned
            nfree = _popcount(free_pos) + _popcount(free_neg)
            if nfree == 0:
                return -1
            if nfree == 1:
                if free_pos:
                    assigned |= free_pos
                    values |= free_pos
                else:
                    assigned |= free_neg
                changed = True
    if assigned == full:
        return <long>values
    rest = ~assigned & full
    bit = rest & (~rest + 1)
    result = _solve(cpos, cneg, m, full, assigned | bit, values | bit)
    if result >= 0:
        return result
    return _solve(cpos, cneg, m, full, assigned | bit, values)


def find_model(clauses, int n):
    """DPLL search; returns a satisfying valuation mask, or -1."""
    cdef unsigned int full = (1u << n) - 1 if n else 0
    cdef int m = len(clauses)
    cdef int i
    cdef unsigned int *cpos
    cdef unsigned int *cneg
    cdef long result
    for pos, neg in clauses:
        if pos == 0 and neg == 0:
            return -1
    cpos = <unsigned int *>malloc(m * sizeof(unsigned int))
    cneg = <unsigned int *>malloc(m * sizeof(unsigned int))
    if (cpos == NULL or cneg == NULL) and m:
        free(cpos)
        free(cneg)
        raise MemoryError()
    for i in range(m):
        cpos[i] = clauses[i][0]
        cneg[i] = clauses[i][1]
    result = _solve(cpos, cneg, m, full, 0, 0)
    free(cpos)
    free(cneg)
    return result


def enum_models(clauses, int n):
    """All satisfying valuation masks, in increasing order."""
    cdef unsigned int full = (1u << n) - 1 if n else 0
    cdef int m = len(clauses)
    cdef int i
    cdef unsigned long v
    cdef bint ok
    cdef unsigned int *cpos
    cdef unsigned int *cneg
    out = []
    cpos = <unsigned int *>malloc(m * sizeof(unsigned int))
    cneg = <unsigned int *>malloc(m * sizeof(unsigned int))
    if (cpos == NULL or cneg == NULL) and m:
        free(cpos)
        free(cneg)
        raise MemoryError()
    for i in range(m):
        cpos[i] = clauses[i][0]
        cneg[i] = clauses[i][1]
    for v in range(1ul << n):
        ok = True
        for i in range(m):
            if not (cpos[i] & v) and not (cneg[i] & ~v & full):
                ok = False
                break
        if ok:
            out.append(<long>v)
    free(cpos)
    free(cneg)
    return out


cdef bint _subsumes(unsigned int ap, unsigned int an,
                    unsigned int bp, unsigned int bn):
    return (ap & ~bp) == 0 and (an & ~bn) == 0


def saturate(clauses):
    """Resolution closure with subsumption; returns the prime implicates."""
    cdef unsigned int cp, cn, kp, kn, overlap, bit, rp, rn
    cdef bint dead
    cdef Py_ssize_t i
    queue = sorted({(p, n) for p, n in clauses if not (p & n)},
                   key=lambda c: _popcount(c[0] | c[1]))
    kept = []
    while queue:
        cp, cn = queue.pop(0)
        dead = False
        for i in range(len(kept)):
            kp, kn = kept[i]
            if _subsumes(kp, kn, cp, cn):
                dead = True
                break
        if dead:
            continue
        kept = [k for k in kept
                if not _subsumes(cp, cn, <unsigned int>k[0],
                                 <unsigned int>k[1])]
        for i in range(len(kept)):
            kp, kn = kept[i]
            overlap = (cp & kn) | (cn & kp)
            while overlap:
                bit = overlap & (~overlap + 1)
                overlap &= overlap - 1
                rp = (cp | kp) & ~bit
                rn = (cn | kn) & ~bit
                if not (rp & rn):
                    queue.append((rp, rn))
        kept.append((cp, cn))
    return sorted(kept)
