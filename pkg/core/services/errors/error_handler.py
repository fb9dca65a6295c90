"""Error handling utilities."""
from core.services.errors.exceptions import ChunkingError, HypertagError
from core.utils.logger import logger

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_CHUNKER_FAILURE = 2


class ErrorHandler:
    """Centralized mapping from toolkit errors to exit codes and HTTP statuses."""
    
    @staticmethod
    def exit_code(error: Exception) -> int:
        """
        Map an error to the CLI exit code.
        
        Args:
            error: Exception raised while running a command
        
        Returns:
            2 when the chunker failed on every sentence, 1 for any other input error
        """
        if isinstance(error, ChunkingError):
            logger.error(f"Chunker failure: {str(error)}")
            return EXIT_CHUNKER_FAILURE
        if isinstance(error, (HypertagError, OSError)):
            logger.error(f"Input error: {str(error)}")
            return EXIT_INPUT_ERROR
        logger.error(f"Unexpected error: {str(error)}", exc_info=True)
        return EXIT_INPUT_ERROR
    
    @staticmethod
    def http_status(error: Exception) -> int:
        """Map an error to the HTTP status returned by the API."""
        if isinstance(error, ChunkingError):
            logger.error(f"Chunker failure: {str(error)}")
            return 422
        if isinstance(error, HypertagError):
            logger.error(f"Input error: {str(error)}")
            return 400
        logger.error(f"Unexpected error: {str(error)}", exc_info=True)
        return 500
