"""Tabulate lower-modification fibres over every orbit label and unramified point."""
import argparse

from tamegl.fqbun import hecke_fiber_counts, labels, unramified_points


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, nargs="+", default=[3, 5], choices=[3, 5])
    ap.add_argument("--dmax", type=int, default=2)
    args = ap.parse_args()
    for q in args.q:
        xs = unramified_points(q)
        for d in range(args.dmax + 1):
            for lab in labels(d):
                fibres = [hecke_fiber_counts(lab, x, q) for x in xs]
                same = all(f == fibres[0] for f in fibres)
                row = ", ".join(f"{t}:{n}" for t, n in sorted(fibres[0].items()))
                print(f"q={q} {str(lab):10} -> {row}" + ("" if same else "  (varies with x)"))


if __name__ == "__main__":
    main()
