"""Convolutional codes and their first-order and state-space representations
over finite products of prime fields (squarefree Z/mZ)."""
