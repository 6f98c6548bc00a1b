# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel.

Same contract as ``_enum_py.enumerate_tuples``; the backtracking and the
closure test run on flat C arrays.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


cdef bint _generates(int* chosen, int r, int n, int* mul, int identity,
                     char* flags, int* members) noexcept:
    cdef int count = 0, k = 0, idx, g, a, b, p
    for idx in range(n):
        flags[idx] = 0
    for idx in range(r):
        g = chosen[idx]
        if not flags[g]:
            flags[g] = 1
            members[count] = g
            count += 1
    if not flags[identity]:
        flags[identity] = 1
        members[count] = identity
        count += 1
    while k < count:
        a = members[k]
        idx = 0
        while idx < count:
            b = members[idx]
            p = mul[a * n + b]
            if not flags[p]:
                flags[p] = 1
                members[count] = p
                count += 1
            p = mul[b * n + a]
            if not flags[p]:
                flags[p] = 1
                members[count] = p
                count += 1
            idx += 1
        if count == n:
            return True
        k += 1
    return count == n


cdef void _search(int d, int prefix, int r, int n, int* mul, int* invv,
                  char* last_ok, int* cand_flat, int* cand_off, int* chosen,
                  bint require_generating, int identity, char* flags,
                  int* members, list out):
    cdef int i, g, last
    if d == r - 1:
        last = invv[prefix]
        if not last_ok[last]:
            return
        chosen[r - 1] = last
        if require_generating and not _generates(chosen, r, n, mul, identity,
                                                 flags, members):
            return
        out.append(tuple([chosen[i] for i in range(r)]))
        return
    for i in range(cand_off[d], cand_off[d + 1]):
        g = cand_flat[i]
        chosen[d] = g
        _search(d + 1, mul[prefix * n + g], r, n, mul, invv, last_ok,
                cand_flat, cand_off, chosen, require_generating, identity,
                flags, members, out)


def enumerate_tuples(int order, mul_flat, inv, int identity, candidates,
                     bint require_generating):
    """Compiled twin of ``_enum_py.enumerate_tuples``."""
    cdef int r = len(candidates)
    cdef int n = order
    if r == 0:
        return []
    cdef int total_cand = 0
    for cand in candidates:
        total_cand += len(cand)
    cdef int* mul = <int*> PyMem_Malloc(n * n * sizeof(int))
    cdef int* invv = <int*> PyMem_Malloc(n * sizeof(int))
    cdef char* last_ok = <char*> PyMem_Malloc(n)
    cdef int* cand_flat = <int*> PyMem_Malloc(max(total_cand, 1) * sizeof(int))
    cdef int* cand_off = <int*> PyMem_Malloc((r + 1) * sizeof(int))
    cdef int* chosen = <int*> PyMem_Malloc(r * sizeof(int))
    cdef char* flags = <char*> PyMem_Malloc(n)
    cdef int* members = <int*> PyMem_Malloc(n * sizeof(int))
    if not (mul and invv and last_ok and cand_flat and cand_off and chosen
            and flags and members):
        raise MemoryError
    cdef int i, pos
    out = []
    try:
        for i in range(n * n):
            mul[i] = mul_flat[i]
        for i in range(n):
            invv[i] = inv[i]
            last_ok[i] = 0
        pos = 0
        for i, cand in enumerate(candidates):
            cand_off[i] = pos
            for g in cand:
                cand_flat[pos] = g
                pos += 1
        cand_off[r] = pos
        for g in candidates[r - 1]:
            last_ok[<int> g] = 1
        _search(0, identity, r, n, mul, invv, last_ok, cand_flat, cand_off,
                chosen, require_generating, identity, flags, members, out)
    finally:
        PyMem_Free(mul)
        PyMem_Free(invv)
        PyMem_Free(last_ok)
        PyMem_Free(cand_flat)
        PyMem_Free(cand_off)
        PyMem_Free(chosen)
        PyMem_Free(flags)
        PyMem_Free(members)
    return out
