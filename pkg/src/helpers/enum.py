from enum import StrEnum


def merge_str_enums(name: str, *enums: type[StrEnum]) -> type[StrEnum]:
    """
    Merges several StrEnum classes into a single StrEnum.

    Members keep their names and values. A name defined twice with two
    different values is rejected, a name defined twice with the same value
    is kept once.

    Args:
        name: The name for the combined enum.
        *enums: The enums to merge, in priority order.

    Returns:
        A new StrEnum class holding every member of the input enums.

    Raises:
        ValueError: If two enums define the same member name with different values.
    """
    members: dict[str, str] = {}
    for enum in enums:
        for member_name, member in enum.__members__.items():
            existing = members.get(member_name)
            if existing is not None and existing != member.value:
                raise ValueError(
                    f"Conflicting values for {member_name}: {existing!r} vs {member.value!r}"
                )
            members[member_name] = member.value

    return StrEnum(name, members)  # type: ignore [reportReturnType]
