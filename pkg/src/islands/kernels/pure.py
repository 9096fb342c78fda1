"""NumPy/pure-Python kernels; the fallback when the extension is not built.

Also the single source of truth for the hand-coded Clifford conjugation
tables (the compiled extension carries a copy that is regression-tested
against these).  Table indices are letter codes I,X,Y,Z = 0..3; phases are
exponents of i and for Clifford conjugation are always 0 or 2.
"""

import numpy as np

NAME = "py"

# g^dagger P g for g = H:   X<->Z, Y -> -Y.
H_LETTER = (0, 3, 2, 1)
H_PHASE = (0, 0, 2, 0)
# g^dagger P g for g = P = diag(1, i):   X -> -Y, Y -> X.
P_LETTER = (0, 2, 1, 3)
P_PHASE = (0, 2, 0, 0)
# g^dagger (P1 x P2) g for g = CZ, indexed by 4*code1 + code2.
# Only XY -> -YX and YX -> -XY pick up a sign.
CZ_LETTER_A = (0, 3, 3, 0, 1, 2, 2, 1, 2, 1, 1, 2, 3, 0, 0, 3)
CZ_LETTER_B = (0, 1, 2, 3, 3, 2, 1, 0, 3, 2, 1, 0, 0, 1, 2, 3)
CZ_PHASE = (0, 0, 0, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 0, 0, 0)

KIND_H, KIND_P, KIND_CZ = 0, 1, 2


def clifford_backprop(kinds, line_a, line_b, letters, phase_exp):
    """Conjugate a Pauli letter array through encoded H/P/CZ gates in
    reverse application order.  `letters` (uint8, 0-based slots) is updated
    in place; returns the accumulated phase exponent mod 4.

    `kinds` holds KIND_* codes, `line_a`/`line_b` 0-based lines (`line_b`
    ignored for single-qubit gates).
    """
    ks = kinds.tolist()
    ia = line_a.tolist()
    ib = line_b.tolist()
    let = letters.tolist()
    phase_exp = int(phase_exp)
    for t in range(len(ks) - 1, -1, -1):
        k = ks[t]
        if k == KIND_H:
            x = let[ia[t]]
            let[ia[t]] = H_LETTER[x]
            phase_exp += H_PHASE[x]
        elif k == KIND_P:
            x = let[ia[t]]
            let[ia[t]] = P_LETTER[x]
            phase_exp += P_PHASE[x]
        else:
            c = 4 * let[ia[t]] + let[ib[t]]
            let[ia[t]] = CZ_LETTER_A[c]
            let[ib[t]] = CZ_LETTER_B[c]
            phase_exp += CZ_PHASE[c]
    letters[:] = let
    return phase_exp & 3


def compose_rotation(blocks, rows0, n):
    """Accumulate per-gate 4x4 blocks into the full 2n x 2n rotation.

    Gate t (application order) updates the four rows starting at rows0[t]:
    R[r0:r0+4] = blocks[t] @ R[r0:r0+4].  Never materializes a dense
    2n x 2n product per gate.
    """
    r = np.eye(2 * n)
    for t in range(blocks.shape[0]):
        r0 = int(rows0[t])
        r[r0 : r0 + 4, :] = blocks[t] @ r[r0 : r0 + 4, :]
    return r


def pair_sum(a, b, ex, ey, ez):
    """The double sum S = -i * sum_{uv} a_u b_v <c_u c_v> in O(n^2).

    `ex`, `ey`, `ez` are the per-slot single-qubit Pauli expectations of the
    input product state.  Pair expectations <c_u c_v> are delta_uv plus a
    purely imaginary part built from one letter factor at each end and the
    Z-string product over the slots in between; running prefix products keep
    every term O(1) amortized.  Returns (Re S, Im S); Im S = -(a . b).
    """
    n = ex.shape[0]
    m = 2 * n
    adot = float(np.dot(a, b))
    total = 0.0
    for u in range(m):
        su = u >> 1
        if (u & 1) == 0:
            if u + 1 < m:
                total += (a[u] * b[u + 1] - a[u + 1] * b[u]) * ez[su]
            fu = -ey[su]
        else:
            fu = ex[su]
        if su + 1 >= n:
            continue
        zp = np.empty(n - su - 1)
        zp[0] = 1.0
        np.cumprod(ez[su + 1 : n - 1], out=zp[1:])
        vx = np.arange(2 * (su + 1), m, 2)
        wx = a[u] * b[vx] - a[vx] * b[u]
        wy = a[u] * b[vx + 1] - a[vx + 1] * b[u]
        total += fu * float(np.dot(wx * zp, ex[su + 1 :]) + np.dot(wy * zp, ey[su + 1 :]))
    return total, -adot
