from functools import wraps

import matplotlib.pyplot as plt


def check_axes_given(func):
    """Decorator that creates a matplotlib.axes if none is passed as ``ax``.

    Parameters
    ----------
    func:
        Plot function taking a keyworded ``ax`` argument.

    Returns
    -------
    func:
        Wrapped function that receives a fresh axes if ``ax`` is missing or None, and
        the given axes otherwise.
    """

    @wraps(func)
    def add_ax(*args, **kwargs):
        if kwargs.get("ax") is None:
            kwargs.pop("ax", None)
            ax = plt.subplots()[1]
            return func(*args, ax=ax, **kwargs)

        return func(*args, **kwargs)

    return add_ax
