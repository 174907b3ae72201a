# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled stepper kernel; same contract as sigmastar._stepper_pure.advance."""


cdef _chunk(long long[:] nxt, long long[:] wrt, signed char[:] mov,
            long long nsym, long long accept, long long reject,
            bytearray tape, long long head, long long state,
            long long steps, long long budget):
    # The tape view is scoped to this call so the caller may resize the
    # bytearray between chunks.
    cdef unsigned char[:] tv = tape
    cdef long long tlen = tv.shape[0]
    cdef long long i
    cdef signed char m
    while steps < budget and state != accept and state != reject:
        if head >= tlen:
            break
        i = state * nsym + tv[head]
        m = mov[i]
        if m != 0:
            tv[head] = <unsigned char> wrt[i]
            head += m
            if head < 0:
                head = 0
        state = nxt[i]
        steps += 1
    return state, head, steps


def advance(tables, bytearray tape, head, state, steps, budget):
    """See sigmastar._stepper_pure.advance for the contract."""
    nxt_o, wrt_o, mov_o, nsym, accept, reject, blank = tables
    cdef long long[:] nxt = nxt_o
    cdef long long[:] wrt = wrt_o
    cdef signed char[:] mov = mov_o
    pad = bytes([blank]) * 256
    cdef long long h = head, st = state, sp = steps, b = budget
    cdef long long ns = nsym, acc = accept, rej = reject
    while sp < b and st != acc and st != rej:
        if h >= len(tape):
            tape.extend(pad)
        st, h, sp = _chunk(nxt, wrt, mov, ns, acc, rej, tape, h, st, sp, b)
    return st, h, sp
