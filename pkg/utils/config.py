import logging
import os
import random
from dataclasses import dataclass, field
from typing import Optional

from dotenv import load_dotenv

from utils.errors import InputError

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
DEFAULT_BUDGET = 10 ** 9
DEFAULT_SEED = 0
BUDGET_ENV_VAR = 'TWISTLAB_BUDGET'


def resolve_budget(cli_value=None):
    """
    Pick the search budget: explicit flag, then environment, then default.

    Args:
        cli_value: Value given on the command line, or None

    Returns:
        Positive integer node budget
    """
    if cli_value is not None:
        budget = cli_value
    else:
        load_dotenv()
        raw = os.environ.get(BUDGET_ENV_VAR)
        if raw is None or raw.strip() == '':
            return DEFAULT_BUDGET
        try:
            budget = int(raw.strip())
        except ValueError:
            raise InputError(f"{BUDGET_ENV_VAR}={raw!r} is not an integer")
        logger.debug(f"Budget taken from {BUDGET_ENV_VAR}: {budget}")
    if budget <= 0:
        raise InputError(f"search budget must be positive, got {budget}")
    return budget


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    m: Optional[int] = None
    field_text: Optional[str] = None
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    seed: int = DEFAULT_SEED
    budget: int = DEFAULT_BUDGET
    options: dict = field(default_factory=dict)

    @classmethod
    def from_args(cls, args):
        known = {'command', 'n', 'm', 'field', 'input', 'output', 'seed', 'budget', 'verbose', 'log_dir'}
        options = {key: value for key, value in vars(args).items() if key not in known}
        return cls(
            command=args.command,
            n=getattr(args, 'n', None),
            m=getattr(args, 'm', None),
            field_text=getattr(args, 'field', None),
            input_path=getattr(args, 'input', None),
            output_path=getattr(args, 'output', None),
            seed=args.seed,
            budget=resolve_budget(args.budget),
            options=options,
        )

    def rng(self):
        return random.Random(self.seed)
