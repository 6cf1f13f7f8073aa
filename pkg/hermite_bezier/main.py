# hermite_bezier/main.py
import sys

from hermite_bezier.cli import run


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
