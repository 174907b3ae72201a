"""Pure-Python stepper kernel.

Reference implementation of the machine-advance loop; semantics must match
sigmastar._stepper_c exactly (the test suite diffs them step for step).
"""


def advance(tables, tape, head, state, steps, budget):
    """Run up to `budget - steps` machine steps in place.

    tables: (nxt, wrt, mov, nsym, accept, reject, blank) as built by
    machine.stepper_tables().  `mov` entries are -1/+1 for real transitions
    and 0 for a missing rule, which jumps to the reject state without
    writing or moving.  `tape` is a bytearray of tape-symbol indices and is
    extended with blanks as the head walks right; a left move at cell 0
    stays at cell 0.  Returns (state, head, steps).
    """
    nxt, wrt, mov, nsym, accept, reject, blank = tables
    pad = bytes([blank]) * 256
    n = len(tape)
    while steps < budget and state != accept and state != reject:
        if head >= n:
            tape.extend(pad)
            n = len(tape)
        i = state * nsym + tape[head]
        m = mov[i]
        if m:
            tape[head] = wrt[i]
            head += m
            if head < 0:
                head = 0
        state = nxt[i]
        steps += 1
    return state, head, steps
