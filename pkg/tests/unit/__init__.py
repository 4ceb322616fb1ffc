# tests/unit package
