# SPDX-License-Identifier: GPL-3.0-or-later
# These exceptions are caught by cmdline.py,
# which selects an exit status accordingly.


class GenericError(Exception):
    """errors raised by the algebra kernel"""


class SpecMismatch(GenericError):
    """operands live over different rings or different variable counts"""


class ParseError(GenericError):
    """
    Malformed text. 'position' is the 0-based offset of the offending
    character in 'text'.
    """

    def __init__(self, reason, text="", position=0):
        super().__init__(reason)
        self.reason = reason
        self.text = text
        self.position = position


class VariableOutOfRange(ParseError):
    """a variable x_j outside x_1..x_n"""

    def __init__(self, index, nvars, text="", position=0):
        super().__init__("variable x%d out of range (n = %d)" % (index, nvars), text, position)
        self.index = index
        self.nvars = nvars


class RangeError(GenericError):
    """an index or a size outside its documented range"""


class SizeTooLarge(GenericError):
    """the factorial determinant refuses large matrices"""


class TableError(GenericError):
    """a minor table violating its invariants"""


class UsageError(GenericError):
    """signal invalid command-line"""
