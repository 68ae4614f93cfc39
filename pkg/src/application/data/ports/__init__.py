from src.application.data.ports.dataset_repository import DatasetRepository

__all__ = ["DatasetRepository"]
