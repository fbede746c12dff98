import sys
import logging

# Configuração inicial de logging
# Mude para logging.INFO ou logging.WARNING em produção para menos verbosidade
logging.basicConfig(level=logging.WARNING, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

from app_logic import cli
from app_logic.errors import BordismoError, GoldenMismatchError, UndeterminedEntryError

# Mapeamento de nomes de subcomandos para as funções de execução
COMMANDS = {
    "groupcoh": cli.cmd_groupcoh,
    "picard": cli.cmd_picard,
    "steenrod": cli.cmd_steenrod,
    "ahss": cli.cmd_ahss,
    "bockstein": cli.cmd_bockstein,
    "orient": cli.cmd_orient,
    "golden": cli.cmd_golden,
}

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_GOLDEN_MISMATCH = 2
EXIT_UNDETERMINED = 3


def main(argv=None) -> int:
    args = cli.build_parser().parse_args(argv)
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
        for nome in list(logging.root.manager.loggerDict):
            if nome.startswith("app_logic"):
                logging.getLogger(nome).setLevel(logging.DEBUG)
    logger.debug(f"APP_MAIN: subcomando '{args.command}'")
    try:
        return COMMANDS[args.command](args)
    except GoldenMismatchError as e:
        print(f"ERRO: {e}", file=sys.stderr)
        return EXIT_GOLDEN_MISMATCH
    except UndeterminedEntryError as e:
        print(f"INDETERMINADO: {e} (candidatos: {', '.join(e.candidates)})", file=sys.stderr)
        return EXIT_UNDETERMINED
    except BordismoError as e:
        logger.error(f"APP_MAIN: {type(e).__name__}: {e}")
        print(f"ERRO: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
