"""
Adam with decoupled weight decay.
"""

import numpy as np

from src.gnn.params import Blocks


class AdamW:
    """
    Adam optimizer whose weight decay shrinks the parameters directly
    instead of being added to the gradient.

    Args:
        learning_rate (float): Step size.
        weight_decay (float): Decay rate, scaled by the learning rate.
        betas (tuple[float, float]): Moment decay rates.
        eps (float): Denominator offset.
    """

    def __init__(
        self,
        learning_rate: float,
        weight_decay: float = 0.0,
        betas: tuple[float, float] = (0.9, 0.999),
        eps: float = 1e-8,
    ):
        self.learning_rate = learning_rate
        self.weight_decay = weight_decay
        self.beta1, self.beta2 = betas
        self.eps = eps
        self.step_count = 0
        self._first: Blocks = {}
        self._second: Blocks = {}

    def step(self, blocks: Blocks, grads: Blocks):
        """Update blocks in place from grads."""
        self.step_count += 1
        correction1 = 1.0 - self.beta1**self.step_count
        correction2 = 1.0 - self.beta2**self.step_count

        for name, block in blocks.items():
            grad = grads[name]
            first = self._first.setdefault(name, np.zeros_like(block))
            second = self._second.setdefault(name, np.zeros_like(block))
            first *= self.beta1
            first += (1.0 - self.beta1) * grad
            second *= self.beta2
            second += (1.0 - self.beta2) * grad**2

            block *= 1.0 - self.learning_rate * self.weight_decay
            block -= (
                self.learning_rate
                * (first / correction1)
                / (np.sqrt(second / correction2) + self.eps)
            )
