def test_register():
    import datalad.api as da
    assert hasattr(da, 'clustered_report')
    assert hasattr(da, 'clustered_verify')
