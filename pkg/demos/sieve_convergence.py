# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

import os
import sys

# Adds the parent directory of this file to the module search path so that pureshape can be imported without
# installing it as a package from pip (which would need a rebuild every time part of the code changed).
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
import pandas as pd

from pureshape.count import convergence_table
from pureshape.helpers import _on_demand_import

click = _on_demand_import('click')
plt = _on_demand_import('matplotlib.pyplot', 'matplotlib')

DATA_FILE_NAME = 'sieve_convergence'

# (n, q, r) progressions of radicands, the first two split the odd quartic classes by their 2-adic shape
PROGRESSIONS = [(4, 8, 1), (4, 8, 5), (6, 36, 1), (3, 9, 0)]
BOUNDS = [10**k for k in range(2, 7)]


def run_counts(save_file: str = None) -> pd.DataFrame:
    """
    Count n-th-power-free radicands in a few progressions for growing bounds and compare against the main terms.
    """
    frames = []
    for n, q, r in PROGRESSIONS:
        frame = convergence_table(n, q, r, BOUNDS)
        frame.insert(0, 'progression', f'n={n}, a={r} mod {q}')
        frames.append(frame)
    results = pd.concat(frames, ignore_index=True)

    if save_file:
        results.to_csv(save_file, index=False)
    return results


def visualize(results: pd.DataFrame):
    f1, p1 = plt.subplots(figsize=(8, 6))
    colours = ['mediumpurple', 'green', 'cornflowerblue', 'darkorange']
    for colour, (label, frame) in zip(colours, results.groupby('progression', sort=False)):
        p1.plot(frame['X'], frame['relative_error'], marker='o', color=colour, label=label)

    p1.set_xscale('log')
    p1.set_yscale('log')
    p1.set(xlabel='Bound X on |a|', ylabel='|exact - main term| / main term', title='Power-free Sieve Convergence')
    p1.legend()
    plt.show()


@click.command
@click.option('--data-file', default=None, help='Use existing counts from a CSV file.')
@click.option('--save-data', is_flag=True, default=False, help='If provided, the counts will be saved to a CSV.')
@click.option('--test', is_flag=True, default=False, help='No plotting will occur, an output code is generated.')
def entry(data_file, save_data, test):
    if data_file is not None:
        results = pd.read_csv(data_file)
    else:
        data_file = os.path.join(os.path.dirname(__file__), f'data/{DATA_FILE_NAME}.csv') if save_data else None
        results = run_counts(save_file=data_file)
    if test:
        final = results[results['X'] == BOUNDS[-1]]
        checks = [
            len(results.index) == len(PROGRESSIONS) * len(BOUNDS),
            bool((final['relative_error'] < 0.01).all()),
            bool((results['exact'] > 0).all()),
        ]
        sys.exit(0 if all(checks) else 1)
    else:
        visualize(results)


if __name__ == '__main__':
    entry()
