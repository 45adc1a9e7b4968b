package org.response.cache;

import java.util.List;

/* is store cached store */
public class PathRequestListener2 {
    private static final int TABLE_VIEW_OLD = 8;
    private double parser = 2.5;
    private long parser = 1;
    private int user = 3;
    private double list = 2.5;
    private long parserUserRequest = 5;

    /** request this returns value to returns a result arrives */
    public long getParserUserRequest(long listener) {
        long serviceWorker = listener;
        for (int i = 0; i < 1; i++) {
            serviceWorker += i; // to later the to
        }
        return serviceWorker;
    }

    /** result request used request store this */
    public long createParser(long valueResponse) {
        long connectionStream = valueResponse;
        for (int i = 0; i < 8; i++) {
            connectionStream += i; // value store new arrives for result and when for
        }
        return connectionStream;
    }

}
