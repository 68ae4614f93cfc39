from enum import StrEnum
from pathlib import Path

import numpy as np
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import ValidationError

from src.application.training.ports.checkpoint_repository import CheckpointRepository
from src.domain.model.errors import CheckpointMismatchError
from src.domain.model.model_bundle import Activation
from src.domain.model.model_bundle import DenseLayer
from src.domain.model.model_bundle import ModelBundle
from src.infrastructure.files.json_codec import write_bytes
from src.infrastructure.files.json_codec import write_json

MANIFEST_FILE = "manifest.json"
PARAMS_FILE = "params.bin"
PARAM_DTYPE = np.dtype("<f4")


class LayerRole(StrEnum):
    EXTRACTOR = "extractor"
    CLASSIFIER = "classifier"
    LEVEL_HEAD = "level_head"


class LayerShape(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    role: LayerRole
    out_dim: int = Field(..., ge=1)
    in_dim: int = Field(..., ge=1)

    @property
    def size(self) -> int:
        return self.out_dim * self.in_dim + self.out_dim


class CheckpointManifest(BaseModel):
    """Layer shapes in parameter order; each layer stores its weight then its bias."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    layers: list[LayerShape]
    activation: Activation
    seed: int | None = None
    step: int = Field(0, ge=0)


class CheckpointFileMapper:
    @staticmethod
    def bytes_to_manifest(content: bytes) -> CheckpointManifest:
        try:
            return CheckpointManifest.model_validate_json(content)
        except ValidationError as error:
            raise CheckpointMismatchError(
                f"{MANIFEST_FILE} is empty or malformed ({error.error_count()} errors)."
            ) from error

    @staticmethod
    def model_to_manifest(model: ModelBundle, step: int) -> CheckpointManifest:
        roles = (
            [LayerRole.EXTRACTOR] * len(model.extractor_layers)
            + [LayerRole.CLASSIFIER]
            + [LayerRole.LEVEL_HEAD] * len(model.level_heads)
        )
        return CheckpointManifest(
            layers=[
                LayerShape(role=role, out_dim=layer.out_dim, in_dim=layer.in_dim)
                for role, layer in zip(roles, model.layers, strict=True)
            ],
            activation=model.activation,
            seed=model.seed,
            step=step,
        )

    @staticmethod
    def bytes_to_layers(content: bytes, manifest: CheckpointManifest) -> list[DenseLayer]:
        expected = sum(shape.size for shape in manifest.layers)
        values = np.frombuffer(content, dtype=PARAM_DTYPE) if len(content) % 4 == 0 else None
        if values is None or values.size != expected:
            raise CheckpointMismatchError(
                f"{PARAMS_FILE} holds {len(content)} bytes, manifest needs {expected * 4}."
            )

        layers: list[DenseLayer] = []
        offset = 0
        for shape in manifest.layers:
            weight_end = offset + shape.out_dim * shape.in_dim
            layers.append(
                DenseLayer(
                    weight=values[offset:weight_end].reshape(shape.out_dim, shape.in_dim),
                    bias=values[weight_end : weight_end + shape.out_dim],
                )
            )
            offset = weight_end + shape.out_dim
        return layers


class FileCheckpointRepository(CheckpointRepository, CheckpointFileMapper):
    """Checkpoint directories: `manifest.json` plus little-endian float32 `params.bin`."""

    def save(self, model: ModelBundle, directory: Path, step: int = 0) -> None:
        params = np.concatenate([array.ravel() for array in model.parameters()])
        write_json(directory / MANIFEST_FILE, self.model_to_manifest(model, step))
        write_bytes(directory / PARAMS_FILE, params.astype(PARAM_DTYPE).tobytes())

    def load(self, directory: Path) -> ModelBundle:
        manifest = self.bytes_to_manifest((directory / MANIFEST_FILE).read_bytes())
        roles = [shape.role for shape in manifest.layers]
        if roles.count(LayerRole.CLASSIFIER) != 1 or LayerRole.EXTRACTOR not in roles:
            raise CheckpointMismatchError(
                "A checkpoint needs extractor layers and exactly one classifier."
            )
        layers = self.bytes_to_layers((directory / PARAMS_FILE).read_bytes(), manifest)
        by_role = {
            role: [layer for layer, r in zip(layers, roles, strict=True) if r == role]
            for role in LayerRole
        }
        return ModelBundle(
            extractor_layers=tuple(by_role[LayerRole.EXTRACTOR]),
            classifier=by_role[LayerRole.CLASSIFIER][0],
            level_heads=tuple(by_role[LayerRole.LEVEL_HEAD]),
            activation=manifest.activation,
            seed=manifest.seed,
        )

    def exists(self, directory: Path) -> bool:
        return (directory / MANIFEST_FILE).is_file() and (directory / PARAMS_FILE).is_file()
