#!/usr/bin/env python3
"""
Test script for the MongoDB report archive, with the client mocked out
"""

import sys
import os
from unittest.mock import MagicMock, patch

# Add the project root to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import database
from database import REPORT_COLLECTIONS, Database


def make_database():
    client = MagicMock()
    with patch("database.MongoClient", return_value=client) as factory:
        db = Database("mongodb://archive:27017/")
    factory.assert_called_once_with("mongodb://archive:27017/", serverSelectionTimeoutMS=5000)
    return db, client


def test_connect_and_indexes():
    db, client = make_database()
    client.server_info.assert_called_once()
    assert set(db.collections) == set(REPORT_COLLECTIONS)
    for collection in db.collections.values():
        collection.create_index.assert_called()
    print("Connect and indexes: ok")


def test_connect_failure_raises():
    client = MagicMock()
    client.server_info.side_effect = Exception("no server")
    with patch("database.MongoClient", return_value=client):
        try:
            Database("mongodb://nowhere:27017/")
            assert False, "connect() must raise when the server is unreachable"
        except Exception as e:
            assert "no server" in str(e)
    print("Connect failure: ok")


def test_save_report():
    db, _ = make_database()
    collection = db.collections["conjecture"]
    collection.insert_one.return_value.inserted_id = "abc"
    success, message = db.save_report("conjecture", {"n": 12, "match": True})
    assert success, message
    document = collection.insert_one.call_args[0][0]
    assert document["n"] == 12 and "createdAt" in document
    success, message = db.save_report("unknown", {"n": 1})
    assert not success and "Unknown report kind" in message
    success, message = db.save_report("triangle", ["not", "a", "dict"])
    assert not success
    collection.insert_one.side_effect = Exception("write failed")
    success, message = db.save_report("conjecture", {"n": 3})
    assert not success and "write failed" in message
    print("Save report: ok")


def test_close():
    db, client = make_database()
    db.close_connection()
    client.close.assert_called_once()
    assert db.client is None and db.collections == {}
    success, message = db.save_report("conjecture", {"n": 1})
    assert success is False and "not connected" in message
    db.close_connection()
    client.close.assert_called_once()
    print("Close: ok")


def test_archive_is_optional_in_cli():
    import cli
    with patch.object(database, "MongoClient", side_effect=Exception("refused")):
        config = cli.parse_config(["triangle", "classify"], {"GAMMAKIT_ARCHIVE": "mongodb://down:1/"})
        assert cli.open_archive(config) is None, "An unreachable archive is skipped"
    print("Optional archive: ok")


if __name__ == "__main__":
    test_connect_and_indexes()
    test_connect_failure_raises()
    test_save_report()
    test_close()
    test_archive_is_optional_in_cli()
    print("\nAll tests passed!")
