import argparse
import logging
import sys
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import IO

from ..config import ConfigParser, MaterialConfig, RunManifest, build_model, material_from_manifest
from ..dielectric import DielectricModel
from .output import Report

logger = logging.getLogger(__name__)

Argument = Callable[[argparse.ArgumentParser], None]


class UsageError(Exception):
    """
    Invalid combination of command-line inputs; reported through argparse.
    """


@dataclass
class RunContext:
    args: argparse.Namespace
    manifest: RunManifest
    config_parser: ConfigParser = field(default_factory=ConfigParser)

    @cached_property
    def _material(self) -> tuple[MaterialConfig, Path | None]:
        return material_from_manifest(self.manifest, self.config_parser)

    @property
    def material(self) -> MaterialConfig:
        return self._material[0]

    def model(self, name: str | None = None) -> DielectricModel:
        material, material_dir = self._material
        if name is not None and name != material.model:
            material = self.config_parser.validate_material(material.model_dump() | {"model": name})
        return build_model(material, material_dir)

    @contextmanager
    def output_stream(self) -> Iterator[IO[str]]:
        if self.manifest.output is None:
            yield sys.stdout
            return
        with open(self.manifest.output, "w", encoding="utf-8", newline="") as stream:
            yield stream


# None when the handler wrote its own output
Handler = Callable[[RunContext], Report | None]


@dataclass(frozen=True)
class Command:
    name: str
    handler: Handler
    help: str
    arguments: tuple[Argument, ...] = ()


class CommandMap:
    def __init__(self):
        self.commands: dict[str, Command] = {}

    def command(
        self,
        name: str,
        help: str,
        arguments: list[Argument] | None = None,
    ) -> Callable[[Handler], Handler]:
        """
        Registers a subcommand handler under the given name.
        """

        def register(func: Handler) -> Handler:
            if name in self.commands:
                raise ValueError(f"command '{name}' is already registered to {self.commands[name].handler.__name__}")
            self.commands[name] = Command(name, func, help, tuple(arguments or ()))
            return func

        return register

    def add_subparsers(self, parser: argparse.ArgumentParser, parents: list[argparse.ArgumentParser]) -> None:
        subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
        for command in self.commands.values():
            subparser = subparsers.add_parser(command.name, help=command.help, parents=parents)
            for add_argument in command.arguments:
                add_argument(subparser)

    def dispatch(self, ctx: RunContext) -> Report | None:
        command = self.commands[ctx.args.command]
        logger.debug(f"running {command.name} ({command.handler.__name__})")
        return command.handler(ctx)


command_map = CommandMap()
