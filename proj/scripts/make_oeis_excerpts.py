#!/usr/bin/env python3
"""Regenerate the b-file excerpts vendored under data/oeis/.

The excerpts are produced by brute force, independently of the C++ library,
so the offline cross-check suite compares two unrelated implementations.

Conventions (pinned by the shell-count identities the sequences tabulate):
  A004016(n) = #{(a,b) in Z^2 : a^2 + ab + b^2 = n},  n = 0..200
  A004018(n) = #{(a,b) in Z^2 : a^2 + b^2   = n},     n = 0..200
  A343771(n) = least k with A004016(k) = 6n
  A018782(n) = least k with A004018(k) = 4n

For the two least-k sequences only the entries with value <= 20_000_000 and
index in [2, 64] are vendored; indices are sparse on purpose, and the n = 0, 1
entries are omitted because upstream's convention for them differs from the
shell-count reading used here.
"""

import pathlib

LIMIT = 20_000_000
OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "oeis"


def rep_counts(limit, hexagonal):
    counts = [0] * (limit + 1)
    if hexagonal:
        bound = int(2 * (limit / 3) ** 0.5) + 2
        for a in range(-bound, bound + 1):
            for b in range(-bound, bound + 1):
                v = a * a + a * b + b * b
                if v <= limit:
                    counts[v] += 1
    else:
        bound = int(limit**0.5) + 2
        for a in range(-bound, bound + 1):
            for b in range(-bound, bound + 1):
                v = a * a + b * b
                if v <= limit:
                    counts[v] += 1
    return counts


def primes_in_class(modulus, residue, count):
    out, p = [], 2
    while len(out) < count:
        if p % modulus == residue and all(p % q for q in range(2, int(p**0.5) + 1)):
            out.append(p)
        p += 1
    return out


def least_k_with_product(target, primes):
    """Minimal prod p_i^{e_i} over distinct primes with prod (e_i + 1) = target."""
    best = [None]

    def rec(rem, idx, cur, max_e):
        if rem == 1:
            if best[0] is None or cur < best[0]:
                best[0] = cur
            return
        if idx >= len(primes):
            return
        p = primes[idx]
        for e in range(1, max_e + 1):
            if rem % (e + 1):
                continue
            val = cur * p**e
            if best[0] is not None and val >= best[0]:
                continue
            rec(rem // (e + 1), idx + 1, val, e)

    rec(target, 0, 1, 64)
    return best[0]


def write_bfile(name, entries, header):
    path = OUT / f"{name}.bfile"
    lines = [f"# {header}"]
    lines += [f"{n} {v}" for n, v in entries]
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {path} ({len(entries)} entries)")


def main():
    OUT.mkdir(parents=True, exist_ok=True)

    hex_counts = rep_counts(200, hexagonal=True)
    sq_counts = rep_counts(200, hexagonal=False)
    write_bfile(
        "A004016",
        list(enumerate(hex_counts)),
        "A004016 excerpt, n = 0..200: points of norm n in the hexagonal lattice",
    )
    write_bfile(
        "A004018",
        list(enumerate(sq_counts)),
        "A004018 excerpt, n = 0..200: points of norm n in the square lattice",
    )

    ps3 = primes_in_class(3, 1, 12)
    ps4 = primes_in_class(4, 1, 12)
    hex_lowest = []
    sq_lowest = []
    for n in range(2, 65):
        k = least_k_with_product(n, ps3)
        if k is not None and k <= LIMIT:
            hex_lowest.append((n, k))
        k = least_k_with_product(n, ps4)
        if k is not None and k <= LIMIT:
            sq_lowest.append((n, k))
    write_bfile(
        "A343771",
        hex_lowest,
        "A343771 excerpt (sparse): least k with exactly 6n points of hexagonal norm k",
    )
    write_bfile(
        "A018782",
        sq_lowest,
        "A018782 excerpt (sparse): least k with exactly 4n points of square norm k",
    )

    # sanity: exhaustive window agrees with the shape search
    win = 250_000
    hx = rep_counts(win, hexagonal=True)
    for n, k in hex_lowest:
        if k <= win:
            first = next(i for i in range(1, win + 1) if hx[i] == 6 * n)
            assert first == k, (n, k, first)
    sq = rep_counts(win, hexagonal=False)
    for n, k in sq_lowest:
        if k <= win:
            first = next(i for i in range(1, win + 1) if sq[i] == 4 * n)
            assert first == k, (n, k, first)
    print("exhaustive-window cross-check passed")


if __name__ == "__main__":
    main()
