from hypothesis import strategies as st

from fockspace.partitions import partitions_up_to

ALL_SMALL = partitions_up_to(8)


def partition_strategy(max_size: int = 8):
    return st.sampled_from([p for p in ALL_SMALL if p.size <= max_size])
