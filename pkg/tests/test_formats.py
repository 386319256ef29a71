"""Tests for the SES container format."""

import pytest

from sesx.core.compressor import compress
from sesx.core.text import thue_morse
from sesx.errors import ParseError
from sesx.formats.sesfile import SesFile, read_ses_file, write_ses_file

SAMPLE_FILE = "SESX1\nraw 10\nn 11\nE 4 9 2\nE 8 6 3\nE 5 1 3\nC 1 97\nC 3 98\nC 11 0\n"


class TestSesFile:
    """Test rendering and parsing containers."""

    def test_render(self):
        """The running example renders line by line."""
        assert SesFile(10, compress(b"aabbaababa")).render() == SAMPLE_FILE

    def test_parse_keeps_order(self):
        """Parsing restores every field and the line order."""
        container = SesFile.parse(SAMPLE_FILE)
        assert container.raw_len == 10
        assert container.ses == compress(b"aabbaababa")
        assert container.render() == SAMPLE_FILE

    def test_empty_input(self):
        """raw 0, n 1 and a single C line."""
        assert SesFile(0, compress(b"")).render() == "SESX1\nraw 0\nn 1\nC 1 0\n"

    def test_read_write(self, tmp_path):
        """Files round-trip through disk."""
        container = SesFile(2**9, compress(thue_morse(9)))
        path = tmp_path / "tm.ses"
        written = write_ses_file(path, container)
        assert written == path.stat().st_size
        assert read_ses_file(path) == container

    @pytest.mark.parametrize(
        "text,line_no",
        [
            ("SESX2\nraw 0\nn 1\nC 1 0\n", 1),
            ("SESX1\nraw 0\nn 2\nC 1 0\n", 3),
            ("SESX1\nraw 1\nn 2\nC 1 97\nE 1 1 1\nC 2 0\n", 5),
            ("SESX1\nraw 1\nn 2\nE 1 2\nC 2 0\n", 4),
            ("SESX1\nraw 1\nn 2\nE 1 -2 1\nC 2 0\n", 4),
            ("SESX1\nraw 1\nn 2\nQ 1 2 1\nC 2 0\n", 4),
            ("SESX1\nraw x\nn 2\nC 2 0\n", 2),
        ],
    )
    def test_malformed(self, text, line_no):
        """Syntax errors name their line."""
        with pytest.raises(ParseError) as exc:
            SesFile.parse(text)
        assert exc.value.line_no == line_no

    def test_truncated(self):
        """Cutting the file mid-line or before the pins is a parse error."""
        for cut in range(len(SAMPLE_FILE) - 1):
            if SAMPLE_FILE[:cut].endswith("\n") and "\nC" in SAMPLE_FILE[:cut]:
                continue
            with pytest.raises(ParseError):
                SesFile.parse(SAMPLE_FILE[:cut])

    def test_no_pins(self):
        """At least one C line is required."""
        with pytest.raises(ParseError):
            SesFile.parse("SESX1\nraw 1\nn 2\nE 1 2 1\n")
