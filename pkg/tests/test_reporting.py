from hermops.reporting import CheckReport


def test_passing_line():
    report = CheckReport("demo", 12)
    assert report.passed
    assert report.line() == "PASS demo (12 checks)"


def test_failing_line_counts_and_first_message():
    report = CheckReport("demo", 10, failures=("k=3 off by 1/2", "k=5 off by 2"))
    assert not report.passed
    assert report.line() == "FAIL demo (2 of 10 checks failed; first: k=3 off by 1/2)"


def test_notes_do_not_affect_status():
    report = CheckReport("demo", 1, notes=("informational",))
    assert report.passed


def test_data_defaults_to_fresh_dict():
    a = CheckReport("a", 1)
    b = CheckReport("b", 1)
    assert a.data == {}
    assert a.data is not b.data
