class NeumaierSum:
    """
    Compensated (Kahan-Babuska-Neumaier) running sum.

    Terms must be added in a fixed order for bitwise-reproducible totals.
    """

    __slots__ = ("_compensation", "_sum")

    def __init__(self, start: float = 0.0):
        self._sum = float(start)
        self._compensation = 0.0

    def add(self, term: float) -> None:
        total = self._sum + term
        if abs(self._sum) >= abs(term):
            self._compensation += (self._sum - total) + term
        else:
            self._compensation += (term - total) + self._sum
        self._sum = total

    @property
    def value(self) -> float:
        return self._sum + self._compensation
