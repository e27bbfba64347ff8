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
"""This module contains classes handling commands issued on the command line."""
from typing import Any, Awaitable, Callable, Dict, List, NamedTuple, Optional, TextIO
from argparse import Namespace
import logging
import json
import sys
import os

import attr

from ..config import Config
from ..diagram import Diagram, label_crossings, load_knot, parse_gauss, parse_labeled
from ..errors import (DiagramError, InsufficientData, MatchFailure, NoConvergence,
                      OctajonesError, VerificationError)
from ..geometry.solver import SolverOptions

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2


class HelpSection(NamedTuple):
    name: str
    order: int
    description: str


SECTION_INVARIANTS = HelpSection("Invariants", 10, "Exact colored Jones computations")
SECTION_GEOMETRY = HelpSection("Geometry", 20, "Gluing equations and their solutions")
SECTION_PIPELINE = HelpSection("Pipeline", 30, "Recursions and their q = 1 limits")
SECTION_MISC = HelpSection("Miscellaneous", 40, "")


class CommandEvent:
    """Holds the parsed arguments of one command invocation and collects its output."""

    processor: 'CommandProcessor'
    command: str
    args: Namespace
    config: Config
    log: logging.Logger
    lines: List[str]
    data: Dict[str, Any]

    def __init__(self, processor: 'CommandProcessor', command: str, args: Namespace) -> None:
        self.processor = processor
        self.command = command
        self.args = args
        self.config = processor.config
        self.log = processor.log.getChild(command)
        self.lines = []
        self.data = {}
        self._diagram: Optional[Diagram] = None

    @property
    def format(self) -> str:
        return getattr(self.args, "format", None) or self.config["output.format"]

    @property
    def seed(self) -> int:
        seed = getattr(self.args, "seed", None)
        return self.config["solver.seed"] if seed is None else seed

    @property
    def jobs(self) -> int:
        jobs = getattr(self.args, "jobs", None)
        return max(1, self.config["state_sum.jobs"] if jobs is None else jobs)

    @property
    def solver_options(self) -> SolverOptions:
        values = {field.name: self.config[f"solver.{field.name}"]
                  for field in attr.fields(SolverOptions) if field.name != "seed"}
        values["radius"] = tuple(values["radius"])
        return SolverOptions(**values, seed=self.seed)

    @property
    def diagram(self) -> Diagram:
        if self._diagram is None:
            self._diagram = self.processor.load_diagram(self.args)
        return self._diagram

    def reply(self, message: str) -> None:
        self.lines.append(message)

    def emit(self, **data: Any) -> None:
        self.data.update(data)

    def render(self) -> str:
        if self.format == "json":
            return json.dumps({"command": self.command, **self.data}, indent=2,
                              sort_keys=True) + "\n"
        return "".join(f"{line}\n" for line in self.lines)


CommandHandlerFunc = Callable[[CommandEvent], Awaitable[bool]]


class CommandHandler:
    name: str

    def __init__(self, handler: CommandHandlerFunc, name: str, help_text: str, help_args: str,
                 help_section: HelpSection, needs_diagram: bool) -> None:
        self._handler = handler
        self.name = name
        self.help_text = help_text
        self.help_args = help_args
        self.help_section = help_section
        self.needs_diagram = needs_diagram

    async def __call__(self, evt: CommandEvent) -> bool:
        if self.needs_diagram:
            # Parse errors surface before any work is done.
            _ = evt.diagram
        return await self._handler(evt)

    @property
    def help(self) -> str:
        return f"**{self.name}** {self.help_args} - {self.help_text}"


command_handlers: Dict[str, CommandHandler] = {}


def command_handler(_func: Optional[CommandHandlerFunc] = None, *, name: Optional[str] = None,
                    help_text: str = "", help_args: str = "",
                    help_section: HelpSection = SECTION_MISC, needs_diagram: bool = True
                    ) -> Callable[[CommandHandlerFunc], CommandHandler]:
    def decorator(func: CommandHandlerFunc) -> CommandHandler:
        actual_name = name or func.__name__.replace("_", "-")
        handler = CommandHandler(func, actual_name, help_text, help_args, help_section,
                                 needs_diagram)
        command_handlers[handler.name] = handler
        return handler

    return decorator if _func is None else decorator(_func)


class CommandProcessor:
    log: logging.Logger = logging.getLogger("octajones.commands")

    def __init__(self, config: Config) -> None:
        self.config = config

    @staticmethod
    def load_diagram(args: Namespace) -> Diagram:
        if getattr(args, "pd", None):
            return parse_labeled(_read_source(args.pd), name=_source_name(args.pd))
        elif getattr(args, "gauss", None):
            diagram = parse_gauss(_read_source(args.gauss), name=_source_name(args.gauss))
            return label_crossings(diagram) if diagram.code else diagram
        elif getattr(args, "knot", None):
            return load_knot(args.knot)
        raise DiagramError("One of --pd, --gauss or --knot is required")

    async def handle(self, command: str, args: Namespace, out: Optional[TextIO] = None) -> int:
        try:
            handler = command_handlers[command]
        except KeyError:
            self.log.error("Unknown command %s", command)
            return EXIT_BAD_INPUT
        evt = CommandEvent(self, command, args)
        code = await self._run_handler(handler, evt)
        self._write(evt, out)
        return code

    async def _run_handler(self, handler: Callable[[CommandEvent], Awaitable[bool]],
                           evt: CommandEvent) -> int:
        try:
            return EXIT_OK if await handler(evt) else EXIT_CHECK_FAILED
        except (DiagramError, InsufficientData, ValueError) as e:
            evt.log.error("Invalid input: %s", e)
            evt.reply(f"Invalid input: {e}")
            evt.emit(ok=False, error=type(e).__name__, message=str(e))
            if isinstance(e, InsufficientData):
                evt.emit(minimum=e.minimum)
            return EXIT_BAD_INPUT
        except MatchFailure as e:
            evt.log.error("Match failed at %s: %s", e.generator, e)
            evt.reply(f"FAIL {e}")
            evt.emit(ok=False, error=type(e).__name__, message=str(e), witness=e.witness)
            return EXIT_CHECK_FAILED
        except (VerificationError, NoConvergence) as e:
            evt.log.error("Check failed: %s", e)
            evt.reply(f"FAIL {e}")
            evt.emit(ok=False, error=type(e).__name__, message=str(e))
            return EXIT_CHECK_FAILED
        except OctajonesError as e:
            evt.log.exception("Unhandled error while running %s", evt.command)
            evt.emit(ok=False, error=type(e).__name__, message=str(e))
            return EXIT_CHECK_FAILED

    def _write(self, evt: CommandEvent, out: Optional[TextIO]) -> None:
        text = evt.render()
        path = getattr(evt.args, "out", None)
        if path:
            with open(path, "w") as file:
                file.write(text)
            self.log.info("Wrote %s output to %s", evt.command, path)
        else:
            (out or sys.stdout).write(text)


def _read_source(source: str) -> str:
    """Reads ``source`` as a file when such a file exists and as an inline code otherwise."""
    if not os.path.isfile(source):
        return source
    with open(source) as file:
        return file.read()


def _source_name(source: str) -> Optional[str]:
    if os.path.isfile(source):
        return os.path.splitext(os.path.basename(source))[0]
    return None
