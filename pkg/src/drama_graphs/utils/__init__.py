# ABOUTME: Utility modules for drama_graphs.
# ABOUTME: Contains the bundled play-type metadata.

from drama_graphs.utils.playtypes import PLAY_TYPES, play_type_counts, write_playtypes

__all__ = ["PLAY_TYPES", "play_type_counts", "write_playtypes"]
