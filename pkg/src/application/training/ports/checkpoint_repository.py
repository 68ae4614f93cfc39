from abc import ABC
from abc import abstractmethod
from pathlib import Path

from src.domain.model.model_bundle import ModelBundle


class CheckpointRepository(ABC):
    """Port for model checkpoint persistence."""

    @abstractmethod
    def save(self, model: ModelBundle, directory: Path, step: int = 0) -> None:
        """Write a checkpoint, overwriting any previous one in `directory`.

        Args:
            model: Parameters to store
            directory: Checkpoint directory
            step: Optimizer step count recorded in the manifest
        """
        ...

    @abstractmethod
    def load(self, directory: Path) -> ModelBundle:
        """Read a checkpoint.

        Raises:
            CheckpointMismatchError: If the parameters disagree with the manifest
            FileNotFoundError: If no checkpoint exists in `directory`
        """
        ...

    @abstractmethod
    def exists(self, directory: Path) -> bool: ...
