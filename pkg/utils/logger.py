import logging
import os
import sys
import shutil
from datetime import datetime
from pathlib import Path
from appdirs import user_data_dir

APP_NAME = "SusyVerifier"
NO_LOG_FILE_ENV = "SUSY_VERIFIER_NO_LOG_FILE"

_configured = False

# Configure logging
def setup_logging(log_file: bool = True):
    """Configure logging for the application"""
    global _configured
    if _configured:
        return
    _configured = True

    # Create a more detailed formatter
    formatter = logging.Formatter(
        fmt='%(asctime)s | %(levelname)-8s | %(name)s | %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    # Remove any existing handlers
    root_logger = logging.getLogger()
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    # Reports may go to stdout, so the console handler writes to stderr
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    console_handler.setLevel(logging.INFO)
    root_logger.setLevel(logging.INFO)
    root_logger.addHandler(console_handler)

    current_log = None
    if log_file and os.environ.get(NO_LOG_FILE_ENV) != "1":
        # Get the appropriate app data directory
        log_dir = Path(user_data_dir(APP_NAME)) / "logs"
        log_dir.mkdir(parents=True, exist_ok=True)

        # Define log file paths
        current_log = log_dir / "susy_verifier.log"
        backup_log = log_dir / f"susy_verifier_{datetime.now().strftime('%Y%m%d_%H%M%S')}.log"

        # Rotate logs if current log exists
        if current_log.exists():
            backup_files = sorted(log_dir.glob("susy_verifier_*.log"), reverse=True)

            # If we have 2 or more backups, remove the oldest one
            while len(backup_files) >= 2:
                backup_files[-1].unlink()
                backup_files.pop()

            shutil.move(str(current_log), str(backup_log))

        file_handler = logging.FileHandler(current_log, encoding='utf-8')
        file_handler.setFormatter(formatter)
        file_handler.setLevel(logging.DEBUG)
        root_logger.addHandler(file_handler)

    main_logger = logging.getLogger(APP_NAME)
    main_logger.setLevel(logging.INFO)

    # Set up debug logging for specific modules
    debug_modules = [
        f"{APP_NAME}.engine",
        f"{APP_NAME}.quotient",
        f"{APP_NAME}.kinematics",
    ]
    for module in debug_modules:
        logging.getLogger(module).setLevel(logging.DEBUG)

    if current_log is not None:
        main_logger.debug(f"Logging started | Log file: {current_log}")

# Create logger instance with context
class ContextLogger(logging.LoggerAdapter):
    def process(self, msg, kwargs):
        # Add check context if available
        check = kwargs.pop('check', None)
        if check:
            msg = f"[{check}] {msg}"
        return msg, kwargs

# Initialize logging when module is imported
setup_logging()

# Create the main logger
logger = ContextLogger(logging.getLogger(APP_NAME), {})
