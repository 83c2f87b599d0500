class ReprojectionCounter:
    """Counts radial re-projections onto a quadric; the count goes into the reports."""

    def __init__(self):
        self.count = 0

    def record(self):
        self.count += 1

    def reset(self) -> int:
        count, self.count = self.count, 0
        return count
