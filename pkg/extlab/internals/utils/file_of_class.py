# Copyright (C) 2025 Cognizant Digital Business, Evolutionary AI.
# All Rights Reserved.
# Issued under the Academic Public License.
#
# You can be released from the terms, and requirements of the Academic Public
# License by purchasing a commercial license.
# Purchase of a commercial license is mandatory for any use of the
# extlab Software in commercial settings.
#
# END COPYRIGHT
from typing import List

from pathlib import Path


class FileOfClass:
    """
    Finds files shipped inside the package relative to a source file.
    Clients are expected to invoke with something like:
            FileOfClass(__file__, path_to_basis="../deploy").
    """

    def __init__(self, source_file: str, path_to_basis: str = "."):
        """
        Constructor

        :param source_file: The source file which will be the starting point for relative paths.
        :param path_to_basis: An optional relative path from the directory of the source file
                        to the directory holding the files of interest.
        """
        self.source_file: str = source_file
        self.path_to_basis: str = path_to_basis

    def get_basis_path(self) -> Path:
        """
        :return: The pathlib Path of the provided basis.
        """
        return Path(self.source_file).parent / self.path_to_basis

    def get_file_in_basis(self, filename: str) -> str:
        """
        :return: An absolute path to a file that resides within the basis.
        """
        return str((self.get_basis_path() / filename).resolve())

    def list_files_in_basis(self, pattern: str) -> List[str]:
        """
        :param pattern: A glob pattern, e.g. "*.json"
        :return: Sorted absolute paths of the matching files in the basis
        """
        return sorted(str(path.resolve()) for path in self.get_basis_path().glob(pattern))
