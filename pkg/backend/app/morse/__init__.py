from app.morse.links import StatusPattern, ascending_link, descending_link, nerve, outward_mask, status_patterns
from app.morse.search import StateSearch, disconnected_links, random_balanced_state, search_state
from app.morse.verdict import LinkCheck, LinkReport, check_all_links, check_link

__all__ = [
    "LinkCheck",
    "LinkReport",
    "StateSearch",
    "StatusPattern",
    "ascending_link",
    "check_all_links",
    "check_link",
    "descending_link",
    "disconnected_links",
    "nerve",
    "outward_mask",
    "random_balanced_state",
    "search_state",
    "status_patterns",
]
