import seaborn as sns
import matplotlib.pyplot as plt

from .interval_dynamics import affine_pieces, as_interval_set


def plot_map(f, n=1, ax=None, color=None, diagonal=True, **kwargs):
    """Graph of f^n, one segment per affine piece."""
    if ax is None:
        ax = plt.gca()
    if color is None:
        color = sns.color_palette()[0]

    for u, v, slope, intercept in affine_pieces(f, n):
        ax.plot([float(u), float(v)],
                [float(slope * u + intercept), float(slope * v + intercept)],
                c=color, **kwargs)

    if diagonal:
        ax.plot([0, 1], [0, 1], c='k', ls='--', lw=.5)

    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1)
    ax.set_aspect('equal')
    ax.set_xlabel('x')
    ax.set_ylabel('f^{}(x)'.format(n) if n > 1 else 'f(x)')
    sns.despine(ax=ax)
    return ax


def plot_interval_set(S, y=0, ax=None, color=None, lw=4, **kwargs):
    """Draw the intervals of S as horizontal bars at height y."""
    if ax is None:
        ax = plt.gca()
    if color is None:
        color = sns.color_palette()[0]

    S = as_interval_set(S)
    for a, b in S:
        ax.hlines(y, float(a), float(b), colors=[color], lw=lw, **kwargs)

    ax.set_xlim(0, 1)
    return ax


def plot_cantor_approx(approx, ax=None, palette='viridis'):
    """Remaining sets of a Cantor approximation, one row per depth."""
    if ax is None:
        ax = plt.gca()

    palette = sns.color_palette(palette, n_colors=approx.depth + 1)
    for j in range(approx.depth + 1):
        plot_interval_set(approx.remaining_at_depth(j), y=j, ax=ax, color=palette[j])

    ax.set_ylim(approx.depth + .5, -.5)
    ax.set_ylabel('depth')
    ax.set_xlabel('x')
    sns.despine(ax=ax, left=True)
    return ax


def plot_beta_atlas(frame, height=3, aspect=2.5):
    """Zero runs and covering times of a `beta_atlas` table against beta."""
    fig, axes = plt.subplots(2, 1, sharex=True,
                             figsize=(height * aspect, 2 * height))

    sns.scatterplot(data=frame, x='beta', y='max_zero_run', hue='verdict',
                    ax=axes[0], s=15)
    axes[0].set_ylabel('longest zero run')

    sns.lineplot(data=frame, x='beta', y='covering_time', ax=axes[1],
                 marker='o', markersize=3)
    axes[1].set_ylabel('covering time')
    axes[1].set_xlabel('beta')

    sns.despine(fig=fig)
    return fig
