import logging
import os
import sys
from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from ..dielectric import DielectricModel, Drude, IdealMetal, ModifiedIdealMetal, Plasma, Tabulated, Vacuum
from ..optical import load_table_file
from .structure import MaterialConfig, RunManifest

logger = logging.getLogger(__name__)

DATA_DIR_ENV = "CASIMIR_DATA_DIR"


class ConfigParser:
    """
    Loads YAML material and manifest files into validated models. Validation errors
    are logged one per line and end the process.
    """

    def __init__(self):
        self.material: MaterialConfig | None = None
        self.manifest: RunManifest | None = None
        self.material_path: Path | None = None

    @staticmethod
    def _read_yaml(path: Path) -> dict[str, Any]:
        if not path.is_file():
            logger.error(f"config file {path} not found")
            sys.exit(1)
        with open(path) as f:
            data = yaml.safe_load(f)
        if data is None:
            return {}
        if not isinstance(data, dict):
            logger.error(f"config file {path} must be a flat key-value mapping")
            sys.exit(1)
        return data

    def load_material(self, path: Path) -> MaterialConfig:
        self.material_path = path
        return self.validate_material(self._read_yaml(path))

    def validate_material(self, data: dict[str, Any]) -> MaterialConfig:
        try:
            self.material = MaterialConfig.model_validate(data)
        except ValidationError as e:
            self.parse_errors(e, "material", "invalid material config")
        return self.material

    def load_manifest(self, path: Path) -> dict[str, Any]:
        return self._read_yaml(path)

    def validate_manifest(self, data: dict[str, Any]) -> RunManifest:
        try:
            self.manifest = RunManifest.model_validate(data)
        except ValidationError as e:
            self.parse_errors(e, "manifest", "invalid run manifest")
        return self.manifest

    def parse_errors(self, error: ValidationError, base_path: str, name: str):
        for error_details in error.errors():
            loc = list(error_details["loc"])
            msg = error_details["msg"]
            if not loc:
                logger.error(f"{name}: {msg} at {{unknown location}}")
                continue
            path = base_path
            for part in loc[:-1]:
                if isinstance(part, str):
                    path += f".{part}"
                elif isinstance(part, int):
                    path += f"[{part}]"
                else:
                    raise TypeError(f"Unexpected location type {type(part).__name__} in validation error")
            field = loc[-1]
            if isinstance(field, str):
                logger.error(f"{name}: {msg}: {field} at .{path}")
            elif isinstance(field, int):
                logger.error(f"{name}: {msg}: index {field} at .{path}")
            else:
                raise TypeError(f"Unexpected location type {type(field).__name__} in validation error")
        sys.exit(1)


def resolve_data_file(data_file: str, material_dir: Path | None = None) -> Path:
    """
    Absolute paths are used as given; relative ones are looked up next to the
    material file, then under $CASIMIR_DATA_DIR.
    """
    path = Path(data_file)
    if path.is_absolute():
        candidates = [path]
    else:
        candidates = []
        if material_dir is not None:
            candidates.append(material_dir / path)
        if data_dir := os.environ.get(DATA_DIR_ENV):
            candidates.append(Path(data_dir) / path)
        candidates.append(path)
    for candidate in candidates:
        if candidate.is_file():
            return candidate
    raise FileNotFoundError(
        f"material data file '{data_file}' not found (searched: {', '.join(str(c) for c in candidates)})"
    )


def build_model(material: MaterialConfig, material_dir: Path | None = None) -> DielectricModel:
    match material.model:
        case "drude":
            return Drude(omega_p=material.omega_p_rad_s, nu=material.nu_rad_s)
        case "plasma":
            return Plasma(omega_p=material.omega_p_rad_s)
        case "ideal":
            return IdealMetal()
        case "mim":
            return ModifiedIdealMetal()
        case "vacuum":
            return Vacuum()
        case "tabulated":
            assert material.data_file is not None
            table = load_table_file(resolve_data_file(material.data_file, material_dir), material.data_axis)
            return Tabulated(
                table=table,
                extrapolation=material.extrapolation,
                nu=material.nu_rad_s,
                kk_points_per_decade=material.kk_points_per_decade,
            )


def material_from_manifest(manifest: RunManifest, parser: ConfigParser | None = None) -> tuple[MaterialConfig, Path | None]:
    """
    Material file (if any) with the manifest's model and parameter overrides applied.
    """
    parser = parser or ConfigParser()
    if manifest.material is not None:
        material = parser.load_material(manifest.material)
        material_dir = manifest.material.parent
    else:
        material = MaterialConfig()
        material_dir = None
    overrides: dict[str, Any] = {}
    if manifest.model is not None:
        overrides["model"] = manifest.model
    if manifest.omega_p_rad_s is not None:
        overrides["omega_p_rad_s"] = manifest.omega_p_rad_s
    if manifest.nu_rad_s is not None:
        overrides["nu_rad_s"] = manifest.nu_rad_s
    if overrides:
        material = parser.validate_material(material.model_dump() | overrides)
    return material, material_dir
