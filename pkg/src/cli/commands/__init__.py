from src.cli.commands import ablation
from src.cli.commands import decoupling_study
from src.cli.commands import evaluate
from src.cli.commands import gen_data
from src.cli.commands import kd_study
from src.cli.commands import report
from src.cli.commands import run_pipeline
from src.cli.commands import simulate_sampling
from src.cli.commands import stats
from src.cli.commands import train_phase

COMMANDS = (
    gen_data,
    stats,
    run_pipeline,
    train_phase,
    evaluate,
    report,
    simulate_sampling,
    ablation,
    kd_study,
    decoupling_study,
)

__all__ = ["COMMANDS"]
