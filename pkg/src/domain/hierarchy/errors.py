from enum import StrEnum


class HierarchyErrorCode(StrEnum):
    HIERARCHY_ERROR = "HierarchyError"
    HIERARCHY_MALFORMED = "HierarchyMalformed"
    HIERARCHY_DUPLICATE_NODE = "HierarchyDuplicateNode"
    HIERARCHY_WRONG_PARENT_LEVEL = "HierarchyWrongParentLevel"
    HIERARCHY_CYCLE = "HierarchyCycle"
    HIERARCHY_ORPHAN_NODE = "HierarchyOrphanNode"
    HIERARCHY_UNKNOWN_NODE = "HierarchyUnknownNode"
    HIERARCHY_LABEL_MISMATCH = "HierarchyLabelMismatch"


class HierarchyError(Exception):
    """Base class for exceptions raised while building or querying a label hierarchy."""

    error_code: HierarchyErrorCode = HierarchyErrorCode.HIERARCHY_ERROR

    def __init__(
        self,
        message: str = "An error occurred in the label hierarchy.",
        node_id: int | None = None,
    ):
        self.node_id = node_id
        self.message = message if node_id is None else f"Node {node_id}: {message}"

        super().__init__(self.message)


class HierarchyMalformedError(HierarchyError):
    """Exception raised when a hierarchy file cannot be parsed."""

    error_code: HierarchyErrorCode = HierarchyErrorCode.HIERARCHY_MALFORMED

    def __init__(
        self,
        message: str = "Hierarchy file is malformed.",
        node_id: int | None = None,
    ):
        super().__init__(message, node_id)


class DuplicateNodeError(HierarchyError):
    """Exception raised when two nodes share an id."""

    error_code: HierarchyErrorCode = HierarchyErrorCode.HIERARCHY_DUPLICATE_NODE

    def __init__(
        self,
        message: str = "Duplicate node id.",
        node_id: int | None = None,
    ):
        super().__init__(message, node_id)


class WrongParentLevelError(HierarchyError):
    """Exception raised when a parent is not exactly one level above its child."""

    error_code: HierarchyErrorCode = HierarchyErrorCode.HIERARCHY_WRONG_PARENT_LEVEL

    def __init__(
        self,
        message: str = "Parent is not exactly one level above.",
        node_id: int | None = None,
    ):
        super().__init__(message, node_id)


class HierarchyCycleError(HierarchyError):
    """Exception raised when parent edges form a cycle."""

    error_code: HierarchyErrorCode = HierarchyErrorCode.HIERARCHY_CYCLE

    def __init__(
        self,
        message: str = "Cycle detected in parent edges.",
        node_id: int | None = None,
    ):
        super().__init__(message, node_id)


class OrphanNodeError(HierarchyError):
    """Exception raised when a non top-level node has no parent."""

    error_code: HierarchyErrorCode = HierarchyErrorCode.HIERARCHY_ORPHAN_NODE

    def __init__(
        self,
        message: str = "Node below the top level has no parent.",
        node_id: int | None = None,
    ):
        super().__init__(message, node_id)


class UnknownNodeError(HierarchyError):
    """Exception raised when a node id is not part of the hierarchy."""

    error_code: HierarchyErrorCode = HierarchyErrorCode.HIERARCHY_UNKNOWN_NODE

    def __init__(
        self,
        message: str = "Unknown node id.",
        node_id: int | None = None,
    ):
        super().__init__(message, node_id)


class LabelMismatchError(HierarchyError):
    """Exception raised when label vectors do not match the hierarchy leaves."""

    error_code: HierarchyErrorCode = HierarchyErrorCode.HIERARCHY_LABEL_MISMATCH

    def __init__(
        self,
        message: str = "Labels do not match the hierarchy leaf count.",
        node_id: int | None = None,
    ):
        super().__init__(message, node_id)
