from typing import Dict

from app.core.models import Quartet


class QuartetStorage:
    def __init__(self):
        self._quartets: Dict[int, Quartet] = {}

    def save(self, n: int, quartet: Quartet) -> None:
        self._quartets[n] = quartet

    def get(self, n: int) -> Quartet | None:
        return self._quartets.get(n)
