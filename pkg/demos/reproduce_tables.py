"""Recompute the four reference tables and print every cell with its verdict.

Usage: python3 demos/reproduce_tables.py
"""

from spectral_rank.tables import TABLE_IDS, build_table, render_text

if __name__ == "__main__":
    for table_id in TABLE_IDS:
        report = build_table(table_id)
        print(render_text(report))
        for row in report.failures():
            print(f"  mismatch at n={row.n} {row.column}: computed {row.value_text()}, reference {row.reference}")
        print()
