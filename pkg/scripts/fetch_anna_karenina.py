#!/usr/bin/env python3
"""Download the public-domain English Anna Karenina (Constance Garnett
translation, Project Gutenberg ebook 1399) into tests/fixtures/, stripping the
Gutenberg boilerplate, so the end-to-end acceptance tests can run.

Needs outbound network access; the test suite skips the two tests using this
fixture when the file is absent.

    python scripts/fetch_anna_karenina.py [destination]
"""

from __future__ import annotations

import sys
import urllib.request
from pathlib import Path

URLS = [
    "https://www.gutenberg.org/files/1399/1399-0.txt",
    "https://www.gutenberg.org/cache/epub/1399/pg1399.txt",
]
START_MARKER = "*** START OF"
END_MARKER = "*** END OF"


def strip_boilerplate(raw: str) -> str:
    start = raw.find(START_MARKER)
    if start >= 0:
        start = raw.find("\n", start) + 1
    else:
        start = 0
    end = raw.find(END_MARKER)
    if end < 0:
        end = len(raw)
    return raw[start:end].strip() + "\n"


def main() -> int:
    dest = Path(
        sys.argv[1]
        if len(sys.argv) > 1
        else Path(__file__).resolve().parent.parent
        / "tests"
        / "fixtures"
        / "anna_karenina.txt"
    )
    last_error: Exception | None = None
    for url in URLS:
        try:
            print(f"fetching {url} ...")
            with urllib.request.urlopen(url, timeout=60) as resp:
                raw = resp.read().decode("utf-8-sig")
            break
        except Exception as exc:  # try the next mirror
            last_error = exc
            print(f"  failed: {exc}")
    else:
        print(f"could not download the text: {last_error}", file=sys.stderr)
        return 1
    text = strip_boilerplate(raw)
    dest.parent.mkdir(parents=True, exist_ok=True)
    dest.write_text(text, encoding="utf-8")
    print(f"wrote {dest} ({len(text.split()):,} raw words)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
