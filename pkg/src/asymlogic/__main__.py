"""``python -m asymlogic`` dispatches to the command-line front end."""

from __future__ import annotations

from .cli import entry

if __name__ == "__main__":
    entry()
