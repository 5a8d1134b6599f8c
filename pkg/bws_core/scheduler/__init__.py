from .replicates import ReplicatePool

__all__ = ["ReplicatePool"]
