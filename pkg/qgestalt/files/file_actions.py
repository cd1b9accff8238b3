import os
import logging
from pathlib import Path
logger = logging.getLogger(__name__)


class FileActions:

    @classmethod
    def exists(cls, filepath: str) -> bool:
        """
        Determines if a regular file exists at the specified filepath.

        Parameters:
            filepath (str): The path of the file to check.

        Returns:
            bool: True if the file exists, False otherwise.
        """
        return os.path.isfile(filepath)

    @classmethod
    def read_text(cls, filepath: str) -> str:
        """
        Reads the content of a text file.

        Parameters:
            filepath (str): The path of the file to read.

        Returns:
            str: The content of the file.
        Raises:
            FileNotFoundError: If the file does not exist.
            IOError: If an error occurs while reading the file.
        """
        if not cls.exists(filepath):
            raise FileNotFoundError(f"Cannot read {filepath}: File does not exist.")
        try:
            with open(filepath, "r", encoding="utf-8") as f:
                return f.read()
        except IOError as e:
            raise IOError(f"Failed to read {filepath}: {str(e)}")

    @classmethod
    def write(cls, filepath: str, data: str, mode: str = "w") -> bool:
        """
        Writes a report to a file, creating parent directories as needed.

        Parameters:
            filepath (str): The path of the file to write.
            data (str): The text to write.
            mode (str): The file mode to be used for writing. Default is "w" (write). "a" for append.

        Returns:
            bool: True if the operation was successful.
        Raises:
            PermissionError: If write permission is not granted.
            IOError: If an error occurs while writing to the file.
        """
        p = Path(filepath)
        if not p.exists():
            p.parent.mkdir(parents=True, exist_ok=True)

        try:
            # newline="" keeps reports byte-identical across platforms
            with open(filepath, mode, encoding="utf-8", newline="") as f:
                f.write(data)
        except PermissionError:
            raise PermissionError(f"Cannot write to {filepath}: Write permission is not granted.")
        except IOError as e:
            raise IOError(f"Failed to write data to {filepath}: {str(e)}")
        logger.info(f"Report written to file: {filepath}")
        return True
