"""Pure-Python enumeration kernel.

Reference implementation of the tuple backtracking; the compiled twin in
``_enum_cy.pyx`` must produce byte-identical output (the test suite checks
this differentially).
"""

from __future__ import annotations


def enumerate_tuples(order, mul_flat, inv, identity, candidates, require_generating):
    """All tuples (g_0..g_{r-1}) with g_d drawn from candidates[d], product
    equal to the identity and, optionally, generating the whole group.

    The last coordinate is forced to the inverse of the prefix product, so
    only r-1 positions are searched.  Output is in lexicographic order
    provided the candidate lists are sorted.
    """
    r = len(candidates)
    n = order
    last_ok = bytearray(n)
    for x in candidates[-1]:
        last_ok[x] = 1
    chosen = [0] * r
    out = []
    flags = bytearray(n)
    members = [0] * n

    def generates():
        for i in range(n):
            flags[i] = 0
        count = 0
        for g in chosen:
            if not flags[g]:
                flags[g] = 1
                members[count] = g
                count += 1
        if not flags[identity]:
            flags[identity] = 1
            members[count] = identity
            count += 1
        k = 0
        while k < count:
            a = members[k] * n
            idx = 0
            while idx < count:
                b = members[idx]
                p = mul_flat[a + b]
                if not flags[p]:
                    flags[p] = 1
                    members[count] = p
                    count += 1
                p = mul_flat[b * n + members[k]]
                if not flags[p]:
                    flags[p] = 1
                    members[count] = p
                    count += 1
                idx += 1
            if count == n:
                return True
            k += 1
        return count == n

    def search(d, prefix):
        if d == r - 1:
            last = inv[prefix]
            if not last_ok[last]:
                return
            chosen[r - 1] = last
            if require_generating and not generates():
                return
            out.append(tuple(chosen))
            return
        base = prefix * n
        for g in candidates[d]:
            chosen[d] = g
            search(d + 1, mul_flat[base + g])

    if r == 0:
        return []
    search(0, identity)
    return out
