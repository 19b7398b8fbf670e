"""Print orbit sizes, automorphism orders and groupoid masses per gap d."""
import argparse
import json

from tamegl.fqbun import SUPPORTED_Q, aut_order, groupoid_mass, orbit_census


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, nargs="+", default=list(SUPPORTED_Q), choices=SUPPORTED_Q)
    ap.add_argument("--dmax", type=int, default=4)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    table = {}
    for q in args.q:
        for d in range(args.dmax + 1):
            c = orbit_census(d, q)
            table[f"q={q},d={d}"] = {
                "orbits": {str(l): [n, aut_order(l, q)] for l, n in c.sizes},
                "mass": str(groupoid_mass(d, q)),
            }
            if not args.json:
                print(f"q={q} d={d}  mass={groupoid_mass(d, q)}  total={c.total()}")
                for lab, n in c.sizes:
                    print(f"    {str(lab):10} size={n:4}  |Aut|={aut_order(lab, q)}")
    if args.json:
        print(json.dumps(table, indent=2, ensure_ascii=False))


if __name__ == "__main__":
    main()
