# SPDX-License-Identifier: GPL-3.0-or-later
# vim: et:ts=4
"""
This module contains utility functions used by the main system and by the
command line for reporting.
"""

import logging
msg = logging.getLogger(__name__)

#-- Message writers --{{{1


# The function `_' is defined here to prepare for internationalization.
def _(txt):
    return txt


def _format(where, text):
    """
    Format the given text into a proper error message, with option and
    column information in the standard format. Position information is
    taken from the dictionary given as first argument.
    """
    if where is None or where == {}:
        return text

    if "option" in where and where["option"] is not None:
        pos = where["option"]
        if "column" in where and where["column"]:
            pos = "%s:%d" % (pos, int(where["column"]))
        pos = pos + ": "
    else:
        pos = ""
    if "entry" in where:
        text = "%s (in entry %d)" % (text, int(where["entry"]))
    return pos + text


def caret(text, position):
    """
    Return a two-line excerpt of 'text' with a caret under the character at
    the 0-based 'position'. Positions past the end point just after the text.
    """
    position = max(0, min(position, len(text)))
    return "  %s\n  %s^" % (text, " " * position)


def split_csv(text):
    """
    Split a comma-separated list, returning (offset, item) pairs so that
    parse errors in an item can be reported against the whole string.
    """
    items = []
    start = 0
    for piece in text.split(","):
        items.append((start, piece))
        start += len(piece) + 1
    return items
