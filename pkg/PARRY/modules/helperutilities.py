"""
Small helpers shared by the library modules and the plugins: word
prefix/suffix arithmetic and rendering of results on stdout.
"""

import csv
import io
import json
import os
import sys


def common_prefix(x, y):
    """ longest common prefix of two letter sequences, as a tuple """
    n = 0
    for p, q in zip(x, y):
        if p != q:
            break
        n += 1
    return tuple(x[:n])


def common_suffix(x, y):
    """ longest common suffix of two letter sequences, as a tuple """
    n = 0
    for p, q in zip(reversed(x), reversed(y)):
        if p != q:
            break
        n += 1
    return tuple(x[len(x) - n:])


def word_text(word):
    """ letters joined with commas; the empty word is 'eps' """
    if not word:
        return "eps"
    return ",".join(str(x) for x in word)


def read_text_file(path):
    """ contents of a -E/-S style input file, stripped """
    if not os.path.isfile(path):
        raise IOError("no such file: " + path)
    with open(path) as fd:
        return fd.read().strip()


def to_json(doc):
    return json.dumps(doc, sort_keys=True, indent=4)


def to_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if cell is None else cell for cell in row])
    return buf.getvalue()


def emit(text, stream=None):
    """ write one result document, newline terminated """
    stream = stream or sys.stdout
    stream.write(text if text.endswith("\n") else text + "\n")


def compact_text(word, alphabet_size):
    """ letters run together on alphabets up to 10 letters, comma-joined above """
    if alphabet_size > 10:
        return word_text(word)
    return "".join(str(x) for x in word) or "eps"
