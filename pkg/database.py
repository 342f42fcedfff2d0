from pymongo import MongoClient, ASCENDING, DESCENDING
import datetime
import logging

REPORT_COLLECTIONS = {
    "conjecture": "conjecture_reports",
    "disconnected": "disconnected_reports",
    "triangle": "triangle_sweeps",
    "chromatic": "chromatic_sweeps",
}


class Database:
    """Optional MongoDB archive for verification reports."""

    def __init__(self, connection_string="mongodb://localhost:27017/", db_name="gammakit"):
        self.connection_string = connection_string
        self.db_name = db_name
        self.client = None
        self.db = None
        self.collections = {}
        self.connect()

    def connect(self):
        try:
            self.client = MongoClient(self.connection_string, serverSelectionTimeoutMS=5000)
            self.client.server_info()  # Test connection
            self.db = self.client[self.db_name]
            self.collections = {kind: self.db[name] for kind, name in REPORT_COLLECTIONS.items()}
            self._create_report_indexes()
            logging.info(f"Report archive initialized at {self.db_name}")
        except Exception as e:
            logging.error(f"Failed to connect to MongoDB: {str(e)}")
            raise

    def _create_report_indexes(self):
        for kind, collection in self.collections.items():
            try:
                collection.create_index([("n", ASCENDING), ("createdAt", DESCENDING)])
            except Exception as e:
                logging.error(f"Failed to create indexes for {kind} reports: {str(e)}")

    def close_connection(self):
        if self.client:
            try:
                self.client.close()
                self.client = None
                self.db = None
                self.collections = {}
                logging.info("MongoDB connection closed")
            except Exception as e:
                logging.error(f"Error closing MongoDB connection: {str(e)}")

    def save_report(self, kind, report):
        if kind not in REPORT_COLLECTIONS:
            return False, f"Unknown report kind '{kind}'"
        if not isinstance(report, dict):
            return False, f"Report must be a dictionary, received: {type(report)}"
        collection = self.collections.get(kind)
        if collection is None:
            return False, "Report archive is not connected"
        try:
            document = dict(report)
            document["createdAt"] = datetime.datetime.now(datetime.timezone.utc)
            result = collection.insert_one(document)
            logging.info(f"Archived {kind} report {result.inserted_id}")
            return True, f"Report archived with id {result.inserted_id}"
        except Exception as e:
            logging.error(f"Error archiving {kind} report: {str(e)}")
            return False, f"Failed to archive report: {str(e)}"
