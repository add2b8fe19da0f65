"""Test type enums"""

from equifuse.types import Z2, Command, Formula, LabelKind, OutputFormat, RingKind, SBlock


class TestZ2:
    """Test the Z/2 group enum"""

    def test_z2_values(self):
        """Test Z2 enum values"""
        assert Z2.E.value == 0
        assert Z2.A.value == 1

    def test_z2_compose(self):
        """Test the group law"""
        assert Z2.E.compose(Z2.E) is Z2.E
        assert Z2.E.compose(Z2.A) is Z2.A
        assert Z2.A.compose(Z2.A) is Z2.E

    def test_z2_inverse(self):
        """Every element is its own inverse"""
        for g in Z2:
            assert g.compose(g.inverse()) is Z2.E

    def test_z2_symbol(self):
        """Test Z2 symbols"""
        assert Z2.E.symbol == "e"
        assert Z2.A.symbol == "a"


class TestCliEnums:
    """Test the enums backing CLI choices"""

    def test_from_value(self):
        """Test creating enums from their command-line values"""
        assert SBlock("c-ee") is SBlock.C_EE
        assert SBlock("c-ea") is SBlock.C_EA
        assert RingKind("d") is RingKind.D
        assert Formula("ext-a") is Formula.EXT_A
        assert OutputFormat("json") is OutputFormat.JSON
        assert Command("verify") is Command.VERIFY

    def test_label_kinds(self):
        """Test LabelKind members"""
        assert {kind.value for kind in LabelKind} == {"plain", "plus", "minus"}
