"""Render every chart for a store file into a directory of SVGs."""

import argparse
from pathlib import Path

from tdkit.analytics import (
    by_component,
    by_quality_attribute,
    lhf_scatter,
    monthly_series,
)
from tdkit.charts import render_chart
from tdkit.store import load


def parse_month(raw: str) -> tuple[int, int]:
    year, month = raw.split("-")
    return int(year), int(month)


def month_window(items) -> tuple[tuple[int, int], tuple[int, int]]:
    """Default to the span between the oldest and newest recorded dates."""
    dates = [item.opened_on for item in items]
    dates += [item.closed_on for item in items if item.closed_on is not None]
    if not dates:
        raise SystemExit("store has no items; pass --from/--to explicitly")
    return (min(dates).year, min(dates).month), (max(dates).year, max(dates).month)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("store", type=Path, help="store file to read")
    parser.add_argument(
        "--out", type=Path, default=Path("charts"), help="output directory"
    )
    parser.add_argument("--from", dest="start", default=None, help="first month, YYYY-MM")
    parser.add_argument("--to", dest="end", default=None, help="last month, YYYY-MM")
    parser.add_argument(
        "--depth", type=int, default=1, help="component rollup depth for the bar chart"
    )
    args = parser.parse_args()

    store = load(args.store)
    items = store.items_by_id()
    mapping = store.config.mapping()
    if args.start and args.end:
        window = (parse_month(args.start), parse_month(args.end))
    else:
        window = month_window(items)

    charts = {
        "lhf": lhf_scatter(items),
        "components": by_component(items, depth=args.depth),
        "quality-attributes": by_quality_attribute(items),
        "burden": monthly_series(items, *window, mapping=mapping),
    }
    args.out.mkdir(parents=True, exist_ok=True)
    for kind, data in charts.items():
        path = args.out / f"{kind}.svg"
        path.write_text(render_chart(data, kind), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
