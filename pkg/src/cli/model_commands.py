"""
Commands that train, evaluate and apply algorithm selectors.
"""

import argparse
import json
from pathlib import Path

from src.cli.client import CLI, arg
from src.cli.run_config import RunConfig
from src.config import Settings
from src.constants import EXIT_FATAL, EXIT_OK
from src.core.report_service import write_report
from src.core.selection_service import GAT_MODEL, SelectionService
from src.gnn.params import AblationVariant, LossMode
from src.selectors.families import ModelFamily
from src.utils.logger import Logger

MODEL_CHOICES = [str(family) for family in ModelFamily] + [GAT_MODEL]
REPORT_SUFFIX = ".report.json"


class ModelCommands:
    """
    This class defines the model commands.
    """

    def __init__(self, selection_service: SelectionService, logger: Logger, settings: Settings):
        """
        Initialize the ModelCommands class.

        Args:
            selection_service (SelectionService): Selector training and inference.
            logger (Logger): The logger instance.
            settings (Settings): The settings instance.
        """
        self.selection_service = selection_service
        self.logger = logger
        self.settings = settings

    def setup_commands(self, cli: CLI):
        @cli.command(
            "train",
            help="Train a selector on a training dataset",
            arguments=[
                arg("--model", choices=MODEL_CHOICES, required=True, help="Selector family"),
                arg("--dataset", required=True, help="Training dataset of the build command"),
                arg("--model-file", help="Model document (default: <out>/<model>_<dataset>.json)"),
                arg("--folds", type=int, help="Cross-validation folds of the grid search"),
                arg(
                    "--params",
                    type=json.loads,
                    help='Fixed hyperparameters as JSON, e.g. \'{"k": 5}\'',
                ),
                arg(
                    "--ablation",
                    choices=[str(v) for v in AblationVariant],
                    help="GAT-MLP encoder combination",
                ),
                arg("--loss", choices=[str(m) for m in LossMode], help="GAT-MLP loss"),
                arg("--epochs", dest="max_epochs", type=int),
                arg("--lr", dest="learning_rate", type=float),
                arg("--weight-decay", dest="weight_decay", type=float),
                arg("--hidden", dest="hidden_dim", type=int),
                arg("--heads", dest="attention_heads", type=int),
                arg("--dropout", type=float),
                arg("--batch-size", dest="batch_size", type=int),
                arg("--patience", type=int),
                arg("--validation-fraction", dest="validation_fraction", type=float),
            ],
        )
        def train(args: argparse.Namespace, config: RunConfig) -> int:
            dataset = Path(args.dataset)
            out = (
                Path(args.model_file)
                if args.model_file
                else config.out / f"{args.model}_{dataset.stem}.json"
            )
            self.selection_service.train(
                args.model,
                dataset,
                out,
                config.seed,
                config.folds,
                config.train,
                hyperparameters=args.params,
                loss_mode=LossMode(args.loss) if args.loss else None,
            )
            return EXIT_OK

        @cli.command(
            "evaluate",
            help="Score a model on a test dataset of the same variant",
            arguments=[
                arg("--model-file", required=True, help="Model document of the train command"),
                arg("--test", dest="test_dataset", required=True, help="Test dataset"),
                arg(
                    "--train",
                    dest="train_dataset",
                    help="Training dataset, for the majority-class baseline",
                ),
                arg("--report", help="Report document (default: <out>/<model-file>.report.json)"),
            ],
        )
        def evaluate(args: argparse.Namespace, config: RunConfig) -> int:
            """
            Write the evaluation report of one model and variant.
            """
            model_file = Path(args.model_file)
            report = self.selection_service.evaluate(
                model_file,
                Path(args.test_dataset),
                Path(args.train_dataset) if args.train_dataset else None,
            )
            out = Path(args.report) if args.report else config.out / (model_file.stem + REPORT_SUFFIX)
            write_report(report, out)
            return EXIT_OK

        @cli.command(
            "predict",
            help="Print the predicted fastest solver(s) of a graph",
            arguments=[
                arg("--model-file", required=True, help="Model document of the train command"),
                arg("graph", help="Graph file"),
            ],
        )
        def predict(args: argparse.Namespace, config: RunConfig) -> int:
            winners = self.selection_service.predict(Path(args.model_file), Path(args.graph))
            print(",".join(str(solver) for solver in winners))
            return EXIT_OK

        @cli.command(
            "gradcheck",
            help="Compare GAT-MLP gradients with central finite differences",
            arguments=[
                arg("--seeds", type=int, default=self.settings.gradcheck_seeds),
                arg("--step", type=float, default=self.settings.gradcheck_step),
                arg("--tolerance", type=float, default=self.settings.gradcheck_tolerance),
                arg("--loss", choices=[str(m) for m in LossMode], default=str(LossMode.SOFTMAX)),
            ],
        )
        def gradcheck(args: argparse.Namespace, config: RunConfig) -> int:
            """
            Returns:
                int: EXIT_FATAL when any seed exceeds the tolerance.
            """
            results = self.selection_service.check_gradients(
                args.seeds, args.step, args.tolerance, LossMode(args.loss)
            )
            worst = max(result.max_error for result in results)
            print(f"max relative error {worst:.3e} over {len(results)} seeds")
            return EXIT_OK if worst < args.tolerance else EXIT_FATAL
