#!/usr/bin/env python3
"""Render every bundled demo recipe to text, DOT, and HTML.

With ``--golden-dir tests/golden`` this regenerates the checked-in golden
files (only the two pinned entries); by default it writes all demos under
``demos/``.
"""

import argparse
from pathlib import Path

from salcheck.catalog import catalog_get
from salcheck.cli import DEMO_RECIPES, demo_model
from salcheck.history import run_recipe
from salcheck.report import render_text, render_dot, render_html

RENDERERS = {"txt": render_text, "dot": render_dot, "html": render_html}
GOLDEN_IDS = ("ew-flag-buggy", "or-set-mrdt")


def render_entry(rid: str, out_dir: Path) -> None:
    entry = catalog_get(rid)
    model = demo_model(entry, run_recipe(entry.spec, DEMO_RECIPES[rid]))
    for ext, renderer in RENDERERS.items():
        path = out_dir / f"{rid}-demo.{ext}"
        path.write_text(renderer(model))
        print(f"wrote {path}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", default="demos")
    ap.add_argument("--golden-dir", default=None,
                    help="regenerate the pinned golden files here instead")
    args = ap.parse_args()
    if args.golden_dir is not None:
        out = Path(args.golden_dir)
        out.mkdir(parents=True, exist_ok=True)
        for rid in GOLDEN_IDS:
            render_entry(rid, out)
        return
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for rid in DEMO_RECIPES:
        render_entry(rid, out)


if __name__ == "__main__":
    main()
