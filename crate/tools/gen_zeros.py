#!/usr/bin/env python3
"""Generate nontrivial-zero fixture files for eulerlab.

Zeros of zeta come from mpmath.zetazero. Zeros of Dirichlet L-functions are
located as sign changes of the rotated completed L-function
    Z(t) = Re(eps^{-1/2} * (q/pi)^{s/2} Gamma((s+nu)/2) L(s, chi)),  s = 1/2 + it,
which is real on the critical line, then refined with mpmath.findroot.
For complex characters the negative ordinates of chi are written to the file
of the conjugate character.

Usage: python3 tools/gen_zeros.py [OUT_DIR]
"""
import sys
import os
import mpmath as mp

mp.mp.dps = 30
STEP = mp.mpf("0.05")


def write(path, label, source, complete_to, ordinates):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# label={label}\n")
        fh.write(f"# source={source}\n")
        fh.write(f"# complete_to={mp.nstr(complete_to, 20)}\n")
        for g in ordinates:
            fh.write(mp.nstr(g, 20, strip_zeros=False) + "\n")


def zeta_file(out, count):
    zs = [mp.zetazero(k).imag for k in range(1, count + 1)]
    write(os.path.join(out, "zeta.zeros"), "zeta",
          f"mpmath {mp.__version__} zetazero(1..{count})", zs[-1], zs)


def character_values(q, gen_values):
    """Values chi(0..q-1) from a dict residue -> complex."""
    return [gen_values.get(n % q, 0) for n in range(q)]


def root_number(q, vals):
    tau = mp.fsum(vals[a] * mp.expjpi(2 * mp.mpf(a) / q) for a in range(q))
    nu = 0 if vals[q - 1] == 1 else 1
    return (1j) ** (-nu) * tau / mp.sqrt(q), nu


def scan(q, vals, t_lo, t_hi):
    eps, nu = root_number(q, vals)
    rot = 1 / mp.sqrt(eps)

    def z(t):
        s = mp.mpf(1) / 2 + 1j * mp.mpf(t)
        v = rot * (mp.mpf(q) / mp.pi) ** (s / 2) * mp.gamma((s + nu) / 2) * mp.dirichlet(s, vals)
        return v.real

    found = []
    t = mp.mpf(t_lo)
    prev = z(t)
    while t < t_hi:
        t2 = t + STEP
        cur = z(t2)
        if prev * cur < 0:
            found.append(mp.findroot(z, (t, t2), solver="anderson"))
        t, prev = t2, cur
    return found


def dirichlet_files(out, label, conj_label, q, vals, height):
    src = f"mpmath {mp.__version__} sign changes of rotated Lambda(1/2+it) step {STEP}, findroot"
    if conj_label is None:
        zs = scan(q, vals, STEP, height)
        write(os.path.join(out, f"{label}.zeros"), label, src, height, zs)
    else:
        zs = scan(q, vals, -height, height)
        pos = [g for g in zs if g > 0]
        neg = sorted(-g for g in zs if g < 0)
        write(os.path.join(out, f"{label}.zeros"), label, src, height, pos)
        write(os.path.join(out, f"{conj_label}.zeros"), conj_label, src, height, neg)


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "data", "zeros")
    os.makedirs(out, exist_ok=True)
    zeta_file(out, 200)
    # mod 3: generator 2, label 3.1 has chi(2) = -1
    dirichlet_files(out, "3.1", None, 3, character_values(3, {1: 1, 2: -1}), 100)
    # mod 4: generator 3, label 4.1 has chi(3) = -1
    dirichlet_files(out, "4.1", None, 4, character_values(4, {1: 1, 3: -1}), 200)
    # mod 5: generator 2; 5.k has chi(2) = e(k/4)
    dirichlet_files(out, "5.2", None, 5, character_values(5, {1: 1, 2: -1, 4: 1, 3: -1}), 100)
    dirichlet_files(out, "5.1", "5.3", 5, character_values(5, {1: 1, 2: 1j, 4: -1, 3: -1j}), 100)


if __name__ == "__main__":
    main()
