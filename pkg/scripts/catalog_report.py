"""Verify every catalog entry at its default parameters and print the findings."""
from semiflows import catalog


def main():
    for entry_id in catalog.CATALOG_IDS:
        entry = catalog.build(entry_id)
        for f in catalog.verify(entry):
            print(f"{entry.instance.name:28s} {f.property:18s} {f.status:12s} "
                  f"expected={f.expected} computed={f.computed.value}")


if __name__ == "__main__":
    main()
