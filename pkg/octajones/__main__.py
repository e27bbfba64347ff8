# octajones - Colored Jones state sums and octahedral gluing equations of knot diagrams
# Copyright (C) 2026 The octajones developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.
from typing import List, Optional
import logging.config
import argparse
import asyncio
import sys

from .commands import CommandProcessor, command_handlers
from .config import load_config
from .version import version

description = ("Exact colored Jones polynomials of knot diagrams, their recursions and the "
               "octahedral gluing equations they specialize to.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="python -m octajones", description=description)
    parser.add_argument("--version", action="version", version=f"%(prog)s {version}")
    parser.add_argument("-c", "--config", type=str, default=None, metavar="<path>",
                        help="the path to a config file overriding the packaged defaults")
    parser.add_argument("command", choices=sorted(command_handlers), metavar="command",
                        help=f"one of {', '.join(sorted(command_handlers))}")
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--pd", type=str, metavar="<code|path>", help="a PD code or a file")
    source.add_argument("--gauss", type=str, metavar="<code|path>",
                        help="a signed Gauss code or a file")
    source.add_argument("--knot", type=str, metavar="<name>", help="a built-in diagram")
    parser.add_argument("--n", type=int, default=None, metavar="<n_max>",
                        help="the largest color to compute")
    parser.add_argument("--de", type=int, default=None, metavar="<order>",
                        help="the order in E of the guessed recursion")
    parser.add_argument("--dqq", type=int, default=None, metavar="<degree>",
                        help="the degree in Q = q^n of the guessed recursion")
    parser.add_argument("--dq", type=int, default=None, metavar="<degree>",
                        help="the degree in q of the guessed recursion")
    parser.add_argument("--grid", type=int, default=None, metavar="<points>",
                        help="the number of unit circle points for the solver")
    parser.add_argument("--seed", type=int, default=None, metavar="<seed>")
    parser.add_argument("--tol", type=float, default=None, metavar="<tolerance>")
    parser.add_argument("--out", type=str, default=None, metavar="<path>",
                        help="write the output to a file instead of stdout")
    parser.add_argument("--jobs", type=int, default=None, metavar="<workers>",
                        help="worker processes for the state sums")
    parser.add_argument("--format", choices=("json", "text"), default=None)
    parser.add_argument("--numeric-only", action="store_true",
                        help="skip the canonical form comparison in match")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    config = load_config(args.config)
    logging.config.dictConfig(config["logging"])
    log = logging.getLogger("octajones")
    log.debug("Running octajones %s", version)
    if args.jobs is not None and args.jobs < 1:
        log.error("--jobs must be at least 1")
        return 2
    processor = CommandProcessor(config)
    return asyncio.run(processor.handle(args.command, args))


if __name__ == "__main__":
    sys.exit(main())
