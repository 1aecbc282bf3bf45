"""Price-table reader interface and format registry."""

import os
from abc import ABC, abstractmethod
from typing import Dict, Optional, Type

import polars as pl

from ..errors import ParseError


class BaseReader(ABC):
    """One file format in, an all-string frame out.

    Typed parsing and validation (with row/column citations) happen in
    ``market.prices``; readers only normalize the header.
    """

    @abstractmethod
    def read(self, path: str, **kwargs) -> pl.DataFrame:
        pass

    def validate_path(self, path: str) -> bool:
        return True

    def read_table(self, path: str, **kwargs) -> pl.DataFrame:
        df = self.read(path, **kwargs)
        return df.rename({c: c.strip() for c in df.columns})


class ReaderRegistry:
    """Maps format keys ("csv", "xlsx") and file extensions to readers."""

    EXTENSION_MAP = {
        ".csv": "csv",
        ".txt": "csv",
        ".xlsx": "xlsx",
    }

    def __init__(self):
        self._readers: Dict[str, Type[BaseReader]] = {}

    def register(self, file_type: str, reader_class: Type[BaseReader]):
        self._readers[file_type] = reader_class

    def get_reader(self, file_type: str) -> Optional[Type[BaseReader]]:
        return self._readers.get(file_type.lower())

    def auto_detect_reader(self, path: str) -> Optional[Type[BaseReader]]:
        """By file extension only."""
        basename = os.path.basename(str(path)).lower()
        for ext, reader_key in self.EXTENSION_MAP.items():
            if basename.endswith(ext):
                return self._readers.get(reader_key)
        return None

    def resolve(self, path: str, fmt: Optional[str] = None) -> BaseReader:
        """Reader instance for ``path``; an explicit ``fmt`` wins over the extension."""
        reader_class = self.get_reader(fmt) if fmt else self.auto_detect_reader(path)
        if reader_class is None:
            known = ", ".join(sorted(self._readers))
            raise ParseError(f"no reader for {path} (format={fmt!r}); known formats: {known}")
        return reader_class()
