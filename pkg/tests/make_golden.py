"""Regenerate the committed golden files: ``python tests/make_golden.py``.

Run only after a deliberate change to the search or the tables; the tests
compare against whatever is committed here.
"""

from pathlib import Path

from fibrun import bounds, printed

GOLDEN = Path(__file__).parent / "golden"


def lines(rows):
    return "".join(r + "\n" for r in rows)


def main():
    GOLDEN.mkdir(exist_ok=True)
    for tid in (1, 2):
        (GOLDEN / f"table{tid}_p15.csv").write_text(bounds.table_csv(tid, 15))
        (GOLDEN / f"table{tid}_p15.diff").write_text(lines(bounds.table_diff(tid, 15)))
    for name, ps in (("table3_p6_10", range(6, 11)), ("table3_p6_29", range(6, 30))):
        (GOLDEN / f"{name}.csv").write_text(bounds.table3_csv(ps))
        notes = ["# " + note for note in printed.TRANSCRIPTION_NOTES]
        (GOLDEN / f"{name}.diff").write_text(lines(notes + bounds.table3_diff(ps)))
    found = bounds.refutation_scan(90, 229)
    (GOLDEN / "refutation_90_229.txt").write_text(lines(bounds.refutation_diff(found)))


if __name__ == "__main__":
    main()
