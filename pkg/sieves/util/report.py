'''
    Table writers for the management commands.

    Cells are formatted once, by format_cell, so CSV and aligned text carry
    the same digits and an archived table can be written out again unchanged.
'''

import csv
from fractions import Fraction

import numpy as np
from django.conf import settings

FORMATS = ('csv', 'text')


def format_cell(value):
    '''
        ints as plain decimals, reals with CSV_SIGNIFICANT_DIGITS significant
        digits ('g' style, '.' as decimal point), None as an empty cell.
    '''
    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating, Fraction)):
        return format(float(value), '.%dg' % settings.CSV_SIGNIFICANT_DIGITS)
    return str(value)


def format_rows(rows):
    return [[format_cell(value) for value in row] for row in rows]


def write_csv(header, rows, out):
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)


def write_text(header, rows, out):
    '''Right-aligned columns separated by two spaces.'''
    widths = [len(name) for name in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]

    def line(cells):
        return '  '.join(cell.rjust(w) for cell, w in zip(cells, widths)).rstrip() + '\n'

    out.write(line(header))
    for row in rows:
        out.write(line(row))


def write_table(header, rows, out, output_format='csv'):
    '''
        Writes an already formatted table (see format_rows).

        :param header: column names
        :param rows: lists of strings
        :param out: text stream
        :param output_format: 'csv' or 'text'
    '''
    if output_format == 'csv':
        write_csv(header, rows, out)
    elif output_format == 'text':
        write_text(header, rows, out)
    else:
        raise ValueError("unknown output format %r" % output_format)
