from loguru import logger

logger.disable("cliquehole")
