"""The reference-fixture harness and the JSON report surface.

`verify-paper` on the command line wraps exactly this: every fixture is
rebuilt from its construction parameters and each recorded value is
re-checked.  One fixture intentionally records a count the construction
cannot produce; its report shows how mismatches are surfaced.
"""

import json

from bincyclic import (
    assemble,
    build_sqrt_complement,
    describe,
    run_fixture,
    select_fixtures,
)


def main():
    for fixture_id in ("example1", "table3-p3", "weight-class-m9-i0"):
        [fx] = select_fixtures(fixture_id)
        report = run_fixture(fx, threads=2)
        flag = "ok" if report.ok else "MISMATCH"
        print(f"[{flag}] {fx.fixture_id}: {len(report.rows)} checks "
              f"in {report.seconds:.2f}s")
        for row in report.mismatches():
            print(f"    {row.code}.{row.field}: expected {row.expected!r}, "
                  f"got {row.actual!r}")
        if not report.ok and fx.note:
            print(f"    note: {fx.note}")

    # the JSON document the CLI's `export` subcommand writes
    z, audit = build_sqrt_complement(5)
    payload = {
        "schema": 1,
        "code": describe(z, generator=assemble(z).generator).as_dict(),
        "audit": audit.as_dict(),
    }
    print("\nexport payload for the m=5 block construction:")
    print(json.dumps(payload, indent=2)[:400], "...")


if __name__ == "__main__":
    main()
