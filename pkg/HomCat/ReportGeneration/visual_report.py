import numpy as np
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt


def visual_report(table, filename = None):
    """
    Heatmaps of the dimensions over (hh, q), one panel per homological degree.

    Args:
        table (TriPoincare): Doubled-degree table.
        filename (str): If given, the figure is saved as <filename>.png.

    Returns:
        The matplotlib figure.
    """
    degrees = sorted({h2 for h2, _, _ in table.entries}) or [0]
    hh_values = sorted({hh2 for _, hh2, _ in table.entries}) or [0]
    q_values = sorted({q2 for _, _, q2 in table.entries}) or [0]
    hh_index = {hh2: k for k, hh2 in enumerate(hh_values)}
    q_index = {q2: k for k, q2 in enumerate(q_values)}

    fig, axes = plt.subplots(1, len(degrees), squeeze = False)
    fig.set_size_inches(4 * len(degrees), 4)
    vmax = max(table.entries.values(), default = 1)
    for ax, h2 in zip(axes[0], degrees):
        grid = np.zeros((len(hh_values), len(q_values)), dtype = int)
        for (h, hh2, q2), dim in table.entries.items():
            if h == h2:
                grid[hh_index[hh2], q_index[q2]] = dim
        image = ax.imshow(grid, cmap = "viridis", origin = "lower", aspect = "auto", vmin = 0, vmax = vmax)
        for (r, c), dim in np.ndenumerate(grid):
            if dim:
                ax.text(c, r, str(dim), ha = "center", va = "center", color = "w", fontsize = 7)
        ax.set_xticks(range(len(q_values)), [f"{q2 / 2:g}" for q2 in q_values], fontsize = 7)
        ax.set_yticks(range(len(hh_values)), [f"{hh2 / 2:g}" for hh2 in hh_values], fontsize = 7)
        ax.set(xlabel = "q", ylabel = "Hochschild degree", title = f"homological degree {h2 / 2:g}")
    fig.colorbar(image, ax = axes[0].tolist(), shrink = 0.8, label = "dimension")
    fig.suptitle(f"Poincaré table up to q = {table.qmax2 / 2:g}")
    if not filename is None:
        plt.savefig(f'{filename}.png', dpi=400, bbox_inches='tight')
    return fig
