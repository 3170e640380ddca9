# Licensed under a 3-clause BSD style license - see LICENSE.rst
# -*- coding: utf-8 -*-
"""CSV export of columnar results.
"""


def write_columns(filename, names, columns, overwrite=True):
    """Write equal-length columns to a CSV file.

    Parameters
    ----------
    filename : :class:`str`
        Output file name.
    names : :class:`list`
        Column names, written as the CSV header.
    columns : :class:`list`
        One array-like per name.
    overwrite : :class:`bool`, optional
        Replace an existing file (default ``True``).

    Returns
    -------
    :class:`astropy.table.Table`
        The table that was written.
    """
    from astropy.table import Table
    from astropy import log
    if len(names) != len(columns):
        raise ValueError('Number of column names does not match number of columns.')
    t = Table(list(columns), names=list(names))
    t.write(filename, format='ascii.csv', overwrite=overwrite)
    log.debug("Wrote {0:d} rows to {1}.".format(len(t), filename))
    return t
