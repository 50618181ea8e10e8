from ..lib import PipeDreamsCommand
from ....bpd import all_bpds
from ....exceptions import NoAdmissibleChain
from ....schubert import admissible_chains, constant_counts, structure_constants


class Command(PipeDreamsCommand):
    help = "Separated-descent structure constants, counted by insertion and checked against the expansion"

    def add_command_arguments(self, parser):
        parser.add_argument("--pi", required=True)
        parser.add_argument("--rho", required=True)

    def handle_command(self, **options):
        p, r = self.read_perm(options["pi"]), self.read_perm(options["rho"])
        left, right = admissible_chains(p, r)
        oracle = structure_constants(p, r)
        if not left or not right:
            if oracle:
                raise NoAdmissibleChain(
                    error=f"No admissible chain for {p if not left else r}, but the product is nonzero",
                    context={"pi": str(p), "rho": str(r)},
                )
            counts = {}
        else:
            counts = constant_counts(p, r, left[0], right[0])

        rows = []
        for s in sorted(set(oracle) | {D.perm for D in counts}):
            counted = {counts.get(D, 0) for D in all_bpds(s)}
            rows.append(
                {
                    "sigma": s,
                    "oracle": oracle.get(s, 0),
                    "counted": sorted(counted),
                    "agrees": counted == {oracle.get(s, 0)},
                }
            )

        def text():
            chains = f"chains {left[0]} | {right[0]}" if left and right else "no admissible chains"
            lines = [chains, "sigma      oracle  counted"]
            lines.extend(
                f"{str(row['sigma']):<10} {row['oracle']:<7} {','.join(map(str, row['counted']))}"
                + ("" if row["agrees"] else "  MISMATCH")
                for row in rows
            )
            return "\n".join(lines)

        # the c table row of (pi, rho): every sigma with its coefficient
        row = {str(s): c for s, c in sorted(oracle.items())}
        self.emit({"pi": p, "rho": r, "row": row, "constants": rows}, text)
        bad = [str(entry["sigma"]) for entry in rows if not entry["agrees"]]
        if bad:
            self.fail(f"Insertion counts disagree with the expansion for {', '.join(bad)}")
