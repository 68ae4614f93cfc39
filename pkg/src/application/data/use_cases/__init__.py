from src.application.data.use_cases.describe_dataset import DatasetDescription
from src.application.data.use_cases.describe_dataset import DescribeDataset
from src.application.data.use_cases.generate_dataset import GenerateDataset
from src.application.data.use_cases.simulate_sampling import SimulateSampling

__all__ = [
    "DatasetDescription",
    "DescribeDataset",
    "GenerateDataset",
    "SimulateSampling",
]
