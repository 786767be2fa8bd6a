from .config import (
    DATA_DIR_ENV,
    ConfigParser,
    build_model,
    material_from_manifest,
    resolve_data_file,
)
from .structure import (
    TABLE_SEPARATIONS_NM,
    TABLE_TEMPERATURE_K,
    MaterialConfig,
    OutputFormat,
    RunManifest,
)

__all__ = [
    "DATA_DIR_ENV",
    "TABLE_SEPARATIONS_NM",
    "TABLE_TEMPERATURE_K",
    "ConfigParser",
    "MaterialConfig",
    "OutputFormat",
    "RunManifest",
    "build_model",
    "material_from_manifest",
    "resolve_data_file",
]
